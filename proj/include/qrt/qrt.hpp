#pragma once

#include "qrt/rational.hpp"
#include "qrt/polynomial.hpp"
#include "qrt/symmatrix.hpp"
#include "qrt/tournament.hpp"
#include "qrt/density.hpp"
#include "qrt/random.hpp"
#include "qrt/tournamenton.hpp"
#include "qrt/flags.hpp"
#include "qrt/catalog.hpp"
#include "qrt/certify.hpp"
#include "qrt/negative.hpp"
#include "qrt/sampler.hpp"
#include "qrt/io.hpp"
