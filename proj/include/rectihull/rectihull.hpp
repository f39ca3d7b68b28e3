#pragma once

#include "rectihull/alpha.hpp"
#include "rectihull/error.hpp"
#include "rectihull/estimators.hpp"
#include "rectihull/geom.hpp"
#include "rectihull/hull.hpp"
#include "rectihull/io.hpp"
#include "rectihull/metrics.hpp"
#include "rectihull/oracle.hpp"
#include "rectihull/parallel.hpp"
#include "rectihull/random.hpp"
#include "rectihull/regions.hpp"
#include "rectihull/svg.hpp"
