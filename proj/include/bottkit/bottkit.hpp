#pragma once

#include "bottkit/error.hpp"
#include "bottkit/partitions.hpp"
#include "bottkit/grassmannian.hpp"
#include "bottkit/bundles.hpp"
#include "bottkit/parser.hpp"
#include "bottkit/bott.hpp"
#include "bottkit/criteria.hpp"
#include "bottkit/diagram.hpp"
#include "bottkit/complexes.hpp"
