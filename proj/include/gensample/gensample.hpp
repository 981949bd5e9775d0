#pragma once

#include "gensample/config.hpp"
#include "gensample/error.hpp"
#include "gensample/experiment.hpp"
#include "gensample/geometry.hpp"
#include "gensample/gsmatrix.hpp"
#include "gensample/io.hpp"
#include "gensample/linalg.hpp"
#include "gensample/plot.hpp"
#include "gensample/pointproc.hpp"
#include "gensample/poissonbound.hpp"
#include "gensample/report.hpp"
#include "gensample/rng.hpp"
#include "gensample/stats.hpp"
#include "gensample/wavelets.hpp"
