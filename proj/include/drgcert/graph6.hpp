#pragma once

#include <string>

#include "drgcert/errors.hpp"
#include "drgcert/graph.hpp"

namespace drg::graph {

struct MalformedGraph6 : Error {
  using Error::Error;
};

/// Canonical graph6 encoding (McKay). Upper triangle in column-major order,
/// packed 6 bits per character, offset 63. No header, no trailing newline.
std::string graph6_encode(const Graph& g);

/// Decodes graph6; tolerates an optional ">>graph6<<" header and trailing
/// whitespace/newline. Throws MalformedGraph6 on anything else.
Graph graph6_decode(const std::string& s);

}  // namespace drg::graph
