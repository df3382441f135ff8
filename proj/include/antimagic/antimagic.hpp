#pragma once

#include "antimagic/audit.hpp"
#include "antimagic/chromatic.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/labelling.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/rng.hpp"
#include "antimagic/sampler.hpp"
