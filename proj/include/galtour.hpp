#ifndef GALTOUR_HPP
#define GALTOUR_HPP

#include "galtour/error.hpp"
#include "galtour/permutation.hpp"
#include "galtour/abstract_group.hpp"
#include "galtour/group.hpp"
#include "galtour/galois.hpp"
#include "galtour/galtourability.hpp"
#include "galtour/towers.hpp"
#include "galtour/dissociation.hpp"
#include "galtour/presets.hpp"
#include "galtour/instance_io.hpp"
#include "galtour/oracle.hpp"

#endif // GALTOUR_HPP
