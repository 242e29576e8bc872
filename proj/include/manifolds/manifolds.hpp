#pragma once

#include "manifolds/core/array_ops.hpp"
#include "manifolds/core/basis.hpp"
#include "manifolds/core/descriptor.hpp"
#include "manifolds/core/errors.hpp"
#include "manifolds/core/manifold.hpp"
#include "manifolds/core/metric.hpp"
#include "manifolds/core/validation.hpp"

#include "manifolds/elementary/euclidean.hpp"
#include "manifolds/elementary/hyperbolic.hpp"
#include "manifolds/elementary/sphere.hpp"

#include "manifolds/matrix/matrix_functions.hpp"
#include "manifolds/matrix/rotations.hpp"
#include "manifolds/matrix/spd.hpp"

#include "manifolds/composite/power.hpp"
#include "manifolds/composite/product.hpp"

#include "manifolds/groups/group_manifold.hpp"

#include "manifolds/apps/bezier.hpp"
#include "manifolds/apps/statistics.hpp"
#include "manifolds/apps/tangent_pca.hpp"
