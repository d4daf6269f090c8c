#pragma once

// Umbrella header: exact-arithmetic toolkit for torus-level instability of
// representations (optimal destabilizing one-parameter subgroups,
// Kempf-Rousseau parabolics, stratification indices), representation heights
// and separability indices, and fiber-level Higgs-structure linear algebra.

#include "kempf/character.hpp"
#include "kempf/charexpr.hpp"
#include "kempf/higgs.hpp"
#include "kempf/instability.hpp"
#include "kempf/json_io.hpp"
#include "kempf/linalg.hpp"
#include "kempf/rational.hpp"
#include "kempf/root_system.hpp"
#include "kempf/selftest.hpp"
#include "kempf/separability.hpp"
