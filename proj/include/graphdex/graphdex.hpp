#ifndef GRAPHDEX_GRAPHDEX_HPP
#define GRAPHDEX_GRAPHDEX_HPP

#include "graphdex/checked.hpp"
#include "graphdex/closed_forms.hpp"
#include "graphdex/derived.hpp"
#include "graphdex/errors.hpp"
#include "graphdex/generators.hpp"
#include "graphdex/graph.hpp"
#include "graphdex/indices.hpp"
#include "graphdex/io.hpp"
#include "graphdex/verifier.hpp"

#endif  // GRAPHDEX_GRAPHDEX_HPP
