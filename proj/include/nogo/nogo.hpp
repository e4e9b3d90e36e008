#pragma once

#include "nogo/characterize.hpp"
#include "nogo/linalg.hpp"
#include "nogo/locc.hpp"
#include "nogo/qubit.hpp"
#include "nogo/signalling.hpp"

namespace nogo {
inline constexpr const char* kVersion = "0.1.0";
}
