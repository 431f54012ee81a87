// Instance file format (JSON, version "1") with rationals as exact strings,
// plus the input digest used by run reports.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rangehit/geom.hpp"
#include "rangehit/hardness.hpp"
#include "rangehit/hypergraph.hpp"

namespace rangehit {

struct AbstractInstance {
    int num_vertices = 0;
    std::vector<std::vector<int>> edges;  // kept literally; canonicalized only when built

    friend bool operator==(const AbstractInstance&, const AbstractInstance&) = default;
};

struct InstanceDocument {
    std::string version = "1";
    std::string kind;  // "geometric" | "abstract"
    std::optional<GeometricInstance> geometric;
    std::optional<AbstractInstance> abstract;

    friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

InstanceDocument document_from_geometric(GeometricInstance instance);
InstanceDocument document_from_abstract(int num_vertices, std::vector<std::vector<int>> edges);

// Stable field order; parse(serialize(doc)) == doc.
std::string serialize_instance(const InstanceDocument& doc);

// Throws std::invalid_argument naming the offending location.
InstanceDocument parse_instance(const std::string& text);

// Trace hypergraph for geometric documents (empty traces dropped and
// counted), literal edges for abstract ones.
BuildResult hypergraph_of(const InstanceDocument& doc);

// Realization audit data: per-vertex polynomial coefficients and the exact
// incidence values, for re-verification against the instance document.
std::string serialize_embedding_sidecar(const Embedding& emb);

std::uint64_t fnv1a64(const std::string& data);
std::string digest_hex(const std::string& data);

}  // namespace rangehit
