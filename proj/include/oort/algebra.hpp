#pragma once

#include "oort/algebra/field.hpp"
#include "oort/algebra/form.hpp"
#include "oort/algebra/laurent.hpp"
#include "oort/algebra/poly.hpp"
