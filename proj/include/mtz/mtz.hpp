#pragma once

// Umbrella header.

#include <mtz/bigfloat.hpp>
#include <mtz/bigint.hpp>
#include <mtz/combinatorics.hpp>
#include <mtz/constants.hpp>
#include <mtz/inversion.hpp>
#include <mtz/oracle.hpp>
#include <mtz/rational.hpp>
#include <mtz/render.hpp>
#include <mtz/series_engine.hpp>
#include <mtz/zeta_algebra.hpp>
