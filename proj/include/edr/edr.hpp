#pragma once

#include "edr/errors.hpp"
#include "edr/fp.hpp"
#include "edr/fpmod.hpp"
#include "edr/integers.hpp"
#include "edr/kaplansky.hpp"
#include "edr/matrix.hpp"
#include "edr/polynomial.hpp"
#include "edr/rational.hpp"
#include "edr/rings.hpp"
#include "edr/smith.hpp"
