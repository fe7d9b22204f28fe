// Umbrella header: the whole library.
#pragma once

#include "prymtyurin/numbers.hpp"
#include "prymtyurin/permutation.hpp"
#include "prymtyurin/permgroup.hpp"
#include "prymtyurin/subgroup.hpp"
#include "prymtyurin/cosets.hpp"
#include "prymtyurin/characters.hpp"
#include "prymtyurin/intmatrix.hpp"
#include "prymtyurin/presentation.hpp"
#include "prymtyurin/engine.hpp"
#include "prymtyurin/families.hpp"
#include "prymtyurin/scenario.hpp"
#include "prymtyurin/report.hpp"
