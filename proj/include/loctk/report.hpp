#pragma once

#include <string>

#include <json.hpp>

#include "loctk/dsl.hpp"
#include "loctk/suite.hpp"

namespace loctk {

// All reports are built as ordered documents: key order is fixed by the
// builder, never by the serializer, so serialized output is byte-stable.
// Nothing time-dependent ever goes into a document.
using Json = nlohmann::ordered_json;

Json check_report(const Workspace& w);
Json analyze_report(const Workspace& w, const std::string& frame,
                    const std::string& joins);  // joins empty: exhaustive family
Json points_report(const Workspace& w, const std::string& frame,
                   const std::string& joins);
Json coproduct_report(const Workspace& w, const std::string& left,
                      const std::string& right, bool verify_spatial);
Json maps_report(const Workspace& w, const std::string& from, const std::string& to);
Json ring_report(const Workspace& w, const std::string& ring);
Json suite_report(const SuiteOptions& opt, const SuiteResult& result);

// Plain-text rendering of a report document: objects as indented key/value
// lines, arrays as dashed items.
std::string render_text(const Json& doc);

}  // namespace loctk
