#include "fcc/jordan.hpp"
