#include "snt/category.hpp"
#include <cstdio>
int main(){ std::puts("bench placeholder"); return 0; }
