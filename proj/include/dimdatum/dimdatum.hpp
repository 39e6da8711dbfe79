#pragma once

#include "catalog.hpp"
#include "config.hpp"
#include "cyclotomic.hpp"
#include "datum.hpp"
#include "error.hpp"
#include "io.hpp"
#include "irreps.hpp"
#include "lattice.hpp"
#include "rational.hpp"
#include "root_datum.hpp"
#include "spectral.hpp"
#include "subgroups.hpp"
#include "weyl_group.hpp"
