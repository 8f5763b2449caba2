#pragma once

#include "cellalg/algebra.hpp"
#include "cellalg/corpus.hpp"
#include "cellalg/discriminant.hpp"
#include "cellalg/generators.hpp"
#include "cellalg/harness.hpp"
#include "cellalg/matrix.hpp"
#include "cellalg/numeric.hpp"
#include "cellalg/prime_field.hpp"
#include "cellalg/radical.hpp"
#include "cellalg/scheme.hpp"
#include "cellalg/scheme_io.hpp"
#include "cellalg/wedderburn.hpp"
