#pragma once

#include "esq/generators.hpp"

namespace test_shapes {

using esq::gen::dumbbell;
using esq::gen::five_lobes;
using esq::gen::random_convex;
using esq::gen::random_star;

}  // namespace test_shapes
