#pragma once

#include "semicurve/chain.hpp"
#include "semicurve/classify.hpp"
#include "semicurve/error.hpp"
#include "semicurve/extensions.hpp"
#include "semicurve/ideal.hpp"
#include "semicurve/semigroup.hpp"
