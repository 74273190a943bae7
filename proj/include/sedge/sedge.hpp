#pragma once

#include "sedge/charpoly.hpp"
#include "sedge/constructions.hpp"
#include "sedge/corpus.hpp"
#include "sedge/crown.hpp"
#include "sedge/enumerate.hpp"
#include "sedge/errors.hpp"
#include "sedge/graph.hpp"
#include "sedge/harness.hpp"
#include "sedge/isomorphism.hpp"
#include "sedge/matrix.hpp"
#include "sedge/poly.hpp"
#include "sedge/report.hpp"
#include "sedge/spectral.hpp"
#include "sedge/zeta.hpp"
