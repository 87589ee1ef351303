// Exact arithmetic substrate: fields, polynomials, matrices, group orders.
#pragma once

#include "factor.hpp"
#include "field.hpp"
#include "group_order.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "poly.hpp"
