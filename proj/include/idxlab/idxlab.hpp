#ifndef IDXLAB_IDXLAB_HPP
#define IDXLAB_IDXLAB_HPP

#include "census.hpp"
#include "errors.hpp"
#include "fermat.hpp"
#include "fields.hpp"
#include "intutil.hpp"
#include "invariant.hpp"
#include "jsonio.hpp"
#include "linalg.hpp"
#include "local.hpp"
#include "model.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "polygcd.hpp"
#include "rational.hpp"
#include "resolution.hpp"
#include "series.hpp"
#include "suite.hpp"
#include "upoly.hpp"
#include "variety.hpp"

#endif
