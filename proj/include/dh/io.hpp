#ifndef DH_IO_HPP
#define DH_IO_HPP

#include <iosfwd>
#include <string>

#include "dh/graph.hpp"
#include "dh/pruning.hpp"

namespace dh {

// Edge list: optional `p <n> <m>` header, `#` comment lines, then one
// `u v` pair per line (0-based ids). Without a header, n = max id + 1.
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

std::string serialize_graph(const Graph& g);  // with header, edges sorted

// Line-oriented: `i vertex kind partner layer phase`, one per step,
// preceded by `root <v>` and `markers <y> <z>` lines.
std::string serialize_pruning_sequence(const PruningSequence& seq);
PruningSequence parse_pruning_sequence(const std::string& text);

}  // namespace dh

#endif
