#pragma once

#include <string>
#include <vector>

#include "loctk/frame.hpp"
#include "loctk/frame_map.hpp"
#include "loctk/points.hpp"
#include "loctk/poset.hpp"
#include "loctk/ring.hpp"
#include "loctk/space.hpp"

namespace loctk {

// Named declarations materialized from one or more input files.  Names are
// unique per kind; declaration order never matters (cross references may
// point forward).  Every object is fully validated on materialization.
struct Workspace {
  struct PosetEntry {
    std::string name;
    Poset poset;
    int line = 0;
  };
  struct SpaceEntry {
    std::string name;
    FiniteSpace space;
    int line = 0;
  };
  struct FrameEntry {
    std::string name;
    Frame frame;
    int line = 0;
  };
  struct RingEntry {
    enum class Form { cyclic, product, table };
    std::string name;
    FiniteRing ring;
    Form form = Form::cyclic;
    int modulus = 0;           // cyclic
    std::string left, right;   // product operands
    int line = 0;
  };
  struct MapEntry {
    std::string name;
    int from = -1, to = -1;  // indices into frames
    std::vector<int32_t> img;
    int line = 0;
  };
  struct JoinsEntry {
    enum class Kind { full, full_except, only };
    std::string name;
    int frame = -1;
    Kind kind = Kind::full;
    std::vector<JoinEntry> entries;  // exceptions or the explicit list
    int line = 0;
  };

  std::vector<PosetEntry> posets;
  std::vector<SpaceEntry> spaces;
  std::vector<FrameEntry> frames;
  std::vector<RingEntry> rings;
  std::vector<MapEntry> maps;
  std::vector<JoinsEntry> joins;

  int poset_index(const std::string& n) const;
  int space_index(const std::string& n) const;
  int frame_index(const std::string& n) const;
  int ring_index(const std::string& n) const;
  int map_index(const std::string& n) const;
  int joins_index(const std::string& n) const;
};

// Parses several named sources into one workspace; all files are read
// before anything is resolved, so references may cross files.
Workspace parse_files(const std::vector<std::pair<std::string, std::string>>& sources);
Workspace parse_workspace(const std::string& text,
                          const std::string& filename = "input");

// Canonical text form.  Declarations are grouped by kind and sorted by
// name; posets and frames print their full carriers and covering
// relations, so constructor forms normalize to explicit orders.  Parsing
// the output reproduces the same canonical element orders, and printing
// again reproduces the same bytes.
std::string print_canonical(const Workspace& w);

// Views into the workspace; the returned map borrows the workspace frames.
FrameMap workspace_map(const Workspace& w, const Workspace::MapEntry& m);
GroundJoinFamily workspace_family(const Workspace& w, const Workspace::JoinsEntry& j);

}  // namespace loctk
