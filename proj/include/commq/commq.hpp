#pragma once

// Umbrella header for the community quality metrics library.

#include "commq/closed_forms.hpp"
#include "commq/errors.hpp"
#include "commq/generators.hpp"
#include "commq/graph.hpp"
#include "commq/metrics.hpp"
#include "commq/optimizer.hpp"
#include "commq/partition.hpp"
#include "commq/ring_sweep.hpp"
#include "commq/series.hpp"
