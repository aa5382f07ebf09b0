#pragma once

#include "skewnabla/determinant.hpp"
#include "skewnabla/error.hpp"
#include "skewnabla/expression.hpp"
#include "skewnabla/lambda.hpp"
#include "skewnabla/nabla.hpp"
#include "skewnabla/random.hpp"
#include "skewnabla/ring.hpp"
#include "skewnabla/serialize.hpp"
#include "skewnabla/shapes.hpp"
#include "skewnabla/symfunc.hpp"
#include "skewnabla/verify.hpp"

namespace skewnabla {
inline constexpr const char* kVersion = "0.1.0";
}
