#include "snt/category.hpp"
#include <cstdio>
int main(){ std::puts("snt placeholder"); return 0; }
