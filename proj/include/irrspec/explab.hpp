#ifndef IRRSPEC_EXPLAB_HPP
#define IRRSPEC_EXPLAB_HPP

#include "explab/config.hpp"
#include "explab/experiments.hpp"
#include "explab/report.hpp"
#include "explab/scan.hpp"
#include "explab/smooth.hpp"

#endif  // IRRSPEC_EXPLAB_HPP
