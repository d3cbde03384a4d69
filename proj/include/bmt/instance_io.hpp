// File plumbing: instance parsing and emission (matrix and graph forms with
// named element sets), the deterministic instance generators, and the
// certificate JSON wire format.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bmt/common.hpp"
#include "bmt/matroid.hpp"
#include "bmt/witness.hpp"

namespace bmt {

struct InstanceFile {
    enum class Kind { Matrix, Graph };
    Kind kind = Kind::Matrix;
    BinaryMatroid matroid;
    std::map<std::string, ElementSet> named_sets;  // 0-based internally
    // Graph payload, kept for faithful re-emission.
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // 0-based vertex ids
};

// "matrix r n" followed by r rows over {0,1}, or "graph m" followed by m
// lines "u v" (1-based vertex ids), then any number of lines
// "set NAME i1 i2 ..." (1-based element ids). '#' opens a comment. Failures
// raise ParseError with line/column diagnostics.
InstanceFile parse_instance(const std::string& text);

// Descriptions: circular_ladder m (m >= 3) | random r n seed |
// disjoint_cycles a b. Deterministic per parameters.
InstanceFile generate_instance(const std::vector<std::string>& words);

// Text that parse_instance maps back to an equal instance.
std::string emit_instance(const InstanceFile& f);

// Canonical JSON: fixed (alphabetical) key order, 1-based element ids, the
// trace as a list of {element, op}. parse_certificate restores every emitted
// field, so emit(parse(emit(c))) == emit(c) byte for byte; the parsed trace
// carries steps only (re-verification needs the built minor).
std::string emit_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);

}  // namespace bmt
