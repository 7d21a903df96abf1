#ifndef POSTLIE_POSTLIE_HPP
#define POSTLIE_POSTLIE_HPP

#include "catalog.hpp"
#include "derivations.hpp"
#include "json_io.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "post_lie.hpp"
#include "rational.hpp"

#endif  // POSTLIE_POSTLIE_HPP
