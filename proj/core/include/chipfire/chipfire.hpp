// chipfire.hpp - umbrella header.

#ifndef CHIPFIRE_CHIPFIRE_HPP
#define CHIPFIRE_CHIPFIRE_HPP

#include "chipfire/bounds.hpp"
#include "chipfire/chip_engine.hpp"
#include "chipfire/generators.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/spectral.hpp"
#include "chipfire/srg.hpp"

#endif  // CHIPFIRE_CHIPFIRE_HPP
