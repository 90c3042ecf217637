#include "snt/hom.hpp"
