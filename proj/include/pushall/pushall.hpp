#pragma once

#include "characterization.hpp"
#include "coloring.hpp"
#include "coloring_enum.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "stack_machine.hpp"
