#include <doctest.h>
TEST_SUITE("statesum") {}
