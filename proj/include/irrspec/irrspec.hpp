#ifndef IRRSPEC_IRRSPEC_HPP
#define IRRSPEC_IRRSPEC_HPP

#include "bipoly.hpp"
#include "embed.hpp"
#include "error.hpp"
#include "explab.hpp"
#include "factor.hpp"
#include "field.hpp"
#include "groups.hpp"
#include "matrix.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "rng.hpp"
#include "text.hpp"

#endif  // IRRSPEC_IRRSPEC_HPP
