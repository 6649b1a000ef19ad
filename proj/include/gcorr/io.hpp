#pragma once

#include <string>

#include <json.hpp>

#include "gcorr/correspondence.hpp"
#include "gcorr/endomorphism.hpp"
#include "gcorr/equivalence.hpp"
#include "gcorr/factorization.hpp"
#include "gcorr/graph.hpp"
#include "gcorr/representation.hpp"

namespace gcorr::io {

// Insertion-ordered so that written files keep vertex/edge order.
using Json = nlohmann::ordered_json;

// Complex scalars are [re, im]; matrices are arrays of rows.
// Every reader throws Error(Input) naming the offending JSON path, prefixed
// by `where` (usually the file name).

Json to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j, const std::string& where);

Json to_json(const Graph& g);
GraphPtr graph_from_json(const Json& j, const std::string& where);

Json to_json(const DimVector& d, const std::vector<std::string>& order);
// Also returns the key order through `order` when non-null.
DimVector dims_from_json(const Json& j, const std::string& where, std::vector<std::string>* order = nullptr);

Json to_json(const ToeplitzRep& rep);
ToeplitzRep rep_from_json(const Json& j, const std::string& where);

Json to_json(const Endo& a);
Endo endo_from_json(const Json& j, const std::string& where);

Json to_json(const Cue& c);
Cue cue_from_json(const Json& j, const std::string& where);

Json to_json(const GraphIso& iso);
Json to_json(const ConjugacyWitness& w);
Json report_json(const FactorizationResult& r);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

// Schemas of every file format, as printed by `--schema`.
std::string schemas();

}  // namespace gcorr::io
