#pragma once

#include "l2res/error.hpp"
#include "l2res/field.hpp"
#include "l2res/homology.hpp"
#include "l2res/ideal.hpp"
#include "l2res/labeled.hpp"
#include "l2res/lsquared.hpp"
#include "l2res/monomial.hpp"
#include "l2res/random.hpp"
#include "l2res/serialize.hpp"
#include "l2res/simplicial.hpp"
#include "l2res/text.hpp"
#include "l2res/verify.hpp"
