#include <doctest.h>
TEST_SUITE("stringnet") {}
