#pragma once

#include "codelen/binomial.hpp"
#include "codelen/bounds.hpp"
#include "codelen/construct.hpp"
#include "codelen/cosets.hpp"
#include "codelen/errors.hpp"
#include "codelen/gf2.hpp"
#include "codelen/search.hpp"
