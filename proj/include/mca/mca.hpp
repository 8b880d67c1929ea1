#pragma once

#include "mca/classify.hpp"
#include "mca/cone.hpp"
#include "mca/cyclotomic.hpp"
#include "mca/dataset.hpp"
#include "mca/errors.hpp"
#include "mca/integer.hpp"
#include "mca/lattice.hpp"
#include "mca/monoid.hpp"
#include "mca/render.hpp"
#include "mca/supercharacter.hpp"
#include "mca/toric.hpp"
