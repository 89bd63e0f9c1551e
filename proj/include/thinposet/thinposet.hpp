#pragma once

#include "thinposet/error.hpp"
#include "thinposet/poset.hpp"
#include "thinposet/constructors.hpp"
#include "thinposet/gf2.hpp"
#include "thinposet/diamonds.hpp"
#include "thinposet/coloring.hpp"
#include "thinposet/integer_matrix.hpp"
#include "thinposet/laurent.hpp"
#include "thinposet/functor_complex.hpp"
#include "thinposet/khovanov.hpp"
#include "thinposet/json_io.hpp"
