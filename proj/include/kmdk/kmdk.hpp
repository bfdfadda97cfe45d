#pragma once

#include "characters.hpp"
#include "coxeter.hpp"
#include "davis.hpp"
#include "error.hpp"
#include "format.hpp"
#include "gcm.hpp"
#include "integer.hpp"
#include "ktheory.hpp"
#include "nodeset.hpp"
#include "poset_functor.hpp"
#include "realization.hpp"
#include "snf.hpp"
#include "weights.hpp"

namespace kmdk {
inline constexpr const char *version = "0.1.0";
}
