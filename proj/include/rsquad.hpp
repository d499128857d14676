#pragma once

#include "rsquad/balance.hpp"
#include "rsquad/bits.hpp"
#include "rsquad/boolfun.hpp"
#include "rsquad/equiv.hpp"
#include "rsquad/error.hpp"
#include "rsquad/form.hpp"
#include "rsquad/gf2field.hpp"
#include "rsquad/gf2poly.hpp"
#include "rsquad/quadform.hpp"
#include "rsquad/recursion.hpp"
#include "rsquad/rs_quadratic.hpp"
#include "rsquad/serialize.hpp"
#include "rsquad/verify.hpp"
