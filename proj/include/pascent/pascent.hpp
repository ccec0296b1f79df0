#ifndef PASCENT_PASCENT_HPP
#define PASCENT_PASCENT_HPP

#include "bigint.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "multipoly.hpp"
#include "patterns.hpp"
#include "series.hpp"
#include "series_json.hpp"
#include "verify.hpp"

#endif
