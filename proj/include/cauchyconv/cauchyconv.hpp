#pragma once

/// Umbrella header for the cauchyconv library.

#include "cauchyconv/counting.hpp"
#include "cauchyconv/irwin_hall.hpp"
#include "cauchyconv/polynomial.hpp"
#include "cauchyconv/rational.hpp"
#include "cauchyconv/render.hpp"
#include "cauchyconv/sequence.hpp"
#include "cauchyconv/stirling.hpp"
#include "cauchyconv/verify.hpp"
