#pragma once

#include "goedel/digit_stream.hpp"
#include "goedel/embedding.hpp"
#include "goedel/error.hpp"
#include "goedel/formula.hpp"
#include "goedel/parser.hpp"
#include "goedel/rational.hpp"
#include "goedel/registry.hpp"
#include "goedel/semantics.hpp"
#include "goedel/truth_interval.hpp"
