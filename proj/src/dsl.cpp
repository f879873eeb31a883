#include "loctk/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "loctk/error.hpp"

namespace loctk {

namespace {

// ---------------------------------------------------------------- lexing

struct Tok {
  enum Kind {
    ident,
    number,
    lbrace,
    rbrace,
    semi,
    colon,
    eq,
    lt,
    slash,
    arrow,   // ->
    larrow,  // <-
    end
  };
  Kind kind = end;
  std::string text;
  long value = 0;
  int line = 1;
};

const char* tok_label(Tok::Kind k) {
  switch (k) {
    case Tok::ident: return "name";
    case Tok::number: return "number";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::semi: return "';'";
    case Tok::colon: return "':'";
    case Tok::eq: return "'='";
    case Tok::lt: return "'<'";
    case Tok::slash: return "'/'";
    case Tok::arrow: return "'->'";
    case Tok::larrow: return "'<-'";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Tok> lex(const std::string& text, const std::string& file) {
  std::vector<Tok> out;
  int line = 1;
  size_t i = 0, n = text.size();
  auto push = [&](Tok::Kind k, std::string s) {
    out.push_back(Tok{k, std::move(s), 0, line});
  };
  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      push(Tok::ident, text.substr(i, j - i));
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      Tok t{Tok::number, text.substr(i, j - i), 0, line};
      try {
        t.value = std::stol(t.text);
      } catch (const std::exception&) {
        fail(Errc::syntax_error, file + ":" + std::to_string(line) + ": number out of range");
      }
      out.push_back(std::move(t));
      i = j;
      continue;
    }
    switch (c) {
      case '{': push(Tok::lbrace, "{"); ++i; continue;
      case '}': push(Tok::rbrace, "}"); ++i; continue;
      case ';': push(Tok::semi, ";"); ++i; continue;
      case ':': push(Tok::colon, ":"); ++i; continue;
      case '=': push(Tok::eq, "="); ++i; continue;
      case '/': push(Tok::slash, "/"); ++i; continue;
      case ',': ++i; continue;  // commas are cosmetic separators
      case '<':
        if (i + 1 < n && text[i + 1] == '-') {
          push(Tok::larrow, "<-");
          i += 2;
        } else {
          push(Tok::lt, "<");
          ++i;
        }
        continue;
      case '-':
        if (i + 1 < n && text[i + 1] == '>') {
          push(Tok::arrow, "->");
          i += 2;
          continue;
        }
        break;
      default:
        break;
    }
    fail(Errc::syntax_error,
         file + ":" + std::to_string(line) + ": stray character '" + std::string(1, c) + "'");
  }
  out.push_back(Tok{Tok::end, "", 0, line});
  return out;
}

// ----------------------------------------------------- raw declarations

struct RawPoset {
  std::string name, file;
  int line = 0;
  std::vector<std::string> mention;                       // first-mention order
  std::vector<std::pair<std::string, std::string>> covers;
};

struct RawSpace {
  std::string name, file;
  int line = 0;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;
};

struct RawFrame {
  enum class Kind { chain, boolean_, downsets, opens, order };
  std::string name, file;
  int line = 0;
  Kind kind = Kind::chain;
  long n = 0;        // chain / boolean parameter
  std::string ref;   // downsets / opens operand
  RawPoset order;    // order { ... } body
};

struct RawRing {
  enum class Kind { cyclic, product, table };
  std::string name, file;
  int line = 0;
  Kind kind = Kind::cyclic;
  long n = 0;
  std::string left, right;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::vector<std::string>>> add_rows, mul_rows;
};

struct RawMap {
  std::string name, file;
  int line = 0;
  std::string from, to;
  std::vector<std::pair<std::string, std::string>> assigns;
  std::vector<int> assign_lines;
};

struct RawJoins {
  std::string name, file;
  int line = 0;
  std::string frame;
  Workspace::JoinsEntry::Kind kind = Workspace::JoinsEntry::Kind::full;
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
  std::vector<int> entry_lines;
};

struct RawFile {
  std::vector<RawPoset> posets;
  std::vector<RawSpace> spaces;
  std::vector<RawFrame> frames;
  std::vector<RawRing> rings;
  std::vector<RawMap> maps;
  std::vector<RawJoins> joins;
};

// ---------------------------------------------------------------- parser

class Parser {
 public:
  Parser(const std::string& text, std::string file, RawFile& out)
      : file_(std::move(file)), toks_(lex(text, file_)), out_(out) {}

  void run() {
    while (!at(Tok::end)) {
      if (accept(Tok::semi)) continue;
      const Tok& t = peek();
      if (t.kind != Tok::ident)
        err(t, "expected a declaration keyword");
      if (t.text == "poset") decl_poset();
      else if (t.text == "space") decl_space();
      else if (t.text == "frame") decl_frame();
      else if (t.text == "ring") decl_ring();
      else if (t.text == "map") decl_map();
      else if (t.text == "joins") decl_joins();
      else err(t, "unknown declaration '" + t.text + "'");
    }
  }

 private:
  std::string file_;
  std::vector<Tok> toks_;
  size_t pos_ = 0;
  RawFile& out_;

  const Tok& peek() const { return toks_[pos_]; }
  bool at(Tok::Kind k) const { return peek().kind == k; }
  bool at_word(const char* w) const { return at(Tok::ident) && peek().text == w; }
  const Tok& advance() { return toks_[pos_++]; }
  bool accept(Tok::Kind k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void err(const Tok& t, const std::string& what) const {
    std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    fail(Errc::syntax_error,
         file_ + ":" + std::to_string(t.line) + ": " + what + ", got " + got);
  }
  const Tok& expect(Tok::Kind k, const char* what) {
    if (!at(k)) err(peek(), std::string("expected ") + (what ? what : tok_label(k)));
    return advance();
  }
  std::string name(const char* what) {
    if (!at(Tok::ident)) err(peek(), std::string("expected ") + what);
    return advance().text;
  }
  void expect_word(const char* w) {
    if (!at_word(w)) err(peek(), std::string("expected '") + w + "'");
    advance();
  }
  long number(const char* what) {
    if (!at(Tok::number)) err(peek(), std::string("expected ") + what);
    return advance().value;
  }

  // poset body and frame order body share one shape
  void order_body(RawPoset& p) {
    std::set<std::string> seen;
    auto mention = [&](const std::string& s) {
      if (seen.insert(s).second) p.mention.push_back(s);
    };
    expect(Tok::lbrace, "'{'");
    while (!accept(Tok::rbrace)) {
      if (at(Tok::end)) err(peek(), "unterminated block; expected '}'");
      std::string a = name("an element name");
      if (accept(Tok::lt)) {
        std::string b = name("an element name after '<'");
        mention(a);
        mention(b);
        p.covers.emplace_back(a, b);
      } else {
        mention(a);
      }
      expect(Tok::semi, "';'");
    }
  }

  void decl_poset() {
    RawPoset p;
    p.file = file_;
    p.line = peek().line;
    advance();
    p.name = name("a poset name");
    order_body(p);
    out_.posets.push_back(std::move(p));
  }

  void decl_space() {
    RawSpace s;
    s.file = file_;
    s.line = peek().line;
    advance();
    s.name = name("a space name");
    expect(Tok::lbrace, "'{'");
    bool saw_points = false;
    while (!accept(Tok::rbrace)) {
      if (at(Tok::end)) err(peek(), "unterminated block; expected '}'");
      const Tok& t = peek();
      if (at_word("points")) {
        if (saw_points)
          fail(Errc::invalid_declaration, where(t.line) + "space '" + s.name +
                                              "' repeats the points statement");
        saw_points = true;
        advance();
        while (at(Tok::ident)) s.points.push_back(advance().text);
        expect(Tok::semi, "';'");
      } else if (at_word("open")) {
        advance();
        expect(Tok::lbrace, "'{'");
        std::vector<std::string> members;
        while (at(Tok::ident)) members.push_back(advance().text);
        expect(Tok::rbrace, "'}'");
        expect(Tok::semi, "';'");
        s.opens.push_back(std::move(members));
      } else {
        err(t, "expected 'points' or 'open'");
      }
    }
    if (!saw_points)
      fail(Errc::invalid_declaration,
           where(s.line) + "space '" + s.name + "' has no points statement");
    out_.spaces.push_back(std::move(s));
  }

  void decl_frame() {
    RawFrame f;
    f.file = file_;
    f.line = peek().line;
    advance();
    f.name = name("a frame name");
    expect(Tok::eq, "'='");
    const Tok& t = peek();
    if (at_word("chain")) {
      advance();
      f.kind = RawFrame::Kind::chain;
      f.n = number("a chain length");
    } else if (at_word("boolean")) {
      advance();
      f.kind = RawFrame::Kind::boolean_;
      f.n = number("an atom count");
    } else if (at_word("downsets")) {
      advance();
      f.kind = RawFrame::Kind::downsets;
      f.ref = name("a poset name");
    } else if (at_word("opens")) {
      advance();
      f.kind = RawFrame::Kind::opens;
      f.ref = name("a space name");
    } else if (at_word("order")) {
      advance();
      f.kind = RawFrame::Kind::order;
      f.order.file = file_;
      f.order.line = f.line;
      order_body(f.order);
    } else {
      err(t, "expected 'chain', 'boolean', 'downsets', 'opens' or 'order'");
    }
    out_.frames.push_back(std::move(f));
  }

  void table_row(std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
    if (!at(Tok::ident) && !at(Tok::number)) err(peek(), "expected a row element");
    std::string row = advance().text;
    expect(Tok::lbrace, "'{'");
    std::vector<std::string> cells;
    while (at(Tok::ident) || at(Tok::number)) cells.push_back(advance().text);
    expect(Tok::rbrace, "'}'");
    expect(Tok::semi, "';'");
    rows.emplace_back(std::move(row), std::move(cells));
  }

  void decl_ring() {
    RawRing r;
    r.file = file_;
    r.line = peek().line;
    advance();
    r.name = name("a ring name");
    expect(Tok::eq, "'='");
    const Tok& t = peek();
    if (at_word("Z")) {
      advance();
      expect(Tok::slash, "'/'");
      r.kind = RawRing::Kind::cyclic;
      r.n = number("a modulus");
    } else if (at_word("product")) {
      advance();
      r.kind = RawRing::Kind::product;
      r.left = name("a ring name");
      r.right = name("a ring name");
    } else if (at_word("table")) {
      advance();
      r.kind = RawRing::Kind::table;
      expect(Tok::lbrace, "'{'");
      while (!accept(Tok::rbrace)) {
        if (at(Tok::end)) err(peek(), "unterminated block; expected '}'");
        if (at_word("elements")) {
          int ln = peek().line;
          advance();
          if (!r.elements.empty())
            fail(Errc::invalid_declaration, where(ln) + "ring '" + r.name +
                                                "' repeats the elements statement");
          while (at(Tok::ident) || at(Tok::number)) r.elements.push_back(advance().text);
          expect(Tok::semi, "';'");
        } else if (at_word("add")) {
          advance();
          table_row(r.add_rows);
        } else if (at_word("mul")) {
          advance();
          table_row(r.mul_rows);
        } else {
          err(peek(), "expected 'elements', 'add' or 'mul'");
        }
      }
    } else {
      err(t, "expected 'Z', 'product' or 'table'");
    }
    out_.rings.push_back(std::move(r));
  }

  void decl_map() {
    RawMap m;
    m.file = file_;
    m.line = peek().line;
    advance();
    m.name = name("a map name");
    expect(Tok::colon, "':'");
    m.from = name("a frame name");
    expect(Tok::arrow, "'->'");
    m.to = name("a frame name");
    expect(Tok::lbrace, "'{'");
    while (!accept(Tok::rbrace)) {
      if (at(Tok::end)) err(peek(), "unterminated block; expected '}'");
      int ln = peek().line;
      std::string a = name("an element name");
      expect(Tok::arrow, "'->'");
      std::string b = name("an element name");
      expect(Tok::semi, "';'");
      m.assigns.emplace_back(std::move(a), std::move(b));
      m.assign_lines.push_back(ln);
    }
    out_.maps.push_back(std::move(m));
  }

  void decl_joins() {
    RawJoins j;
    j.file = file_;
    j.line = peek().line;
    advance();
    j.name = name("a joins name");
    expect_word("on");
    j.frame = name("a frame name");
    expect(Tok::eq, "'='");
    if (at_word("full")) {
      advance();
      if (at_word("except")) {
        advance();
        j.kind = Workspace::JoinsEntry::Kind::full_except;
        entry_block(j);
      } else {
        j.kind = Workspace::JoinsEntry::Kind::full;
      }
    } else if (at_word("only")) {
      advance();
      j.kind = Workspace::JoinsEntry::Kind::only;
      entry_block(j);
    } else {
      err(peek(), "expected 'full' or 'only'");
    }
    out_.joins.push_back(std::move(j));
  }

  void entry_block(RawJoins& j) {
    expect(Tok::lbrace, "'{'");
    while (!accept(Tok::rbrace)) {
      if (at(Tok::end)) err(peek(), "unterminated block; expected '}'");
      int ln = peek().line;
      std::string target = name("a target element");
      expect(Tok::larrow, "'<-'");
      expect(Tok::lbrace, "'{'");
      std::vector<std::string> parts;
      while (at(Tok::ident)) parts.push_back(advance().text);
      expect(Tok::rbrace, "'}'");
      expect(Tok::semi, "';'");
      j.entries.emplace_back(std::move(target), std::move(parts));
      j.entry_lines.push_back(ln);
    }
  }

  std::string where(int line) const { return file_ + ":" + std::to_string(line) + ": "; }
};

std::string at_line(const std::string& file, int line) {
  return file + ":" + std::to_string(line) + ": ";
}

// ----------------------------------------------------- materialization

Poset poset_from_raw(const RawPoset& r, const std::string& what) {
  std::map<std::string, int> idx;
  for (size_t i = 0; i < r.mention.size(); ++i) idx[r.mention[i]] = int(i);
  std::vector<std::pair<int, int>> rel;
  rel.reserve(r.covers.size());
  for (const auto& [a, b] : r.covers) rel.emplace_back(idx[a], idx[b]);
  try {
    return make_poset(int(r.mention.size()), rel, r.mention);
  } catch (const ToolError& e) {
    fail(e.code(), at_line(r.file, r.line) + what + ": " + e.detail());
  }
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = "e" + std::to_string(i);
  return out;
}

struct Builder {
  Workspace w;

  void check_fresh(const char* kind, const std::string& name, int existing,
                   const std::string& file, int line) {
    if (existing >= 0)
      fail(Errc::duplicate_name,
           at_line(file, line) + std::string(kind) + " '" + name + "' is already declared");
  }

  void add_posets(const std::vector<RawPoset>& raws) {
    for (const auto& r : raws) {
      check_fresh("poset", r.name, w.poset_index(r.name), r.file, r.line);
      w.posets.push_back({r.name, poset_from_raw(r, "poset '" + r.name + "'"), r.line});
    }
  }

  void add_spaces(const std::vector<RawSpace>& raws) {
    for (const auto& r : raws) {
      check_fresh("space", r.name, w.space_index(r.name), r.file, r.line);
      std::map<std::string, int> idx;
      for (size_t i = 0; i < r.points.size(); ++i) {
        if (!idx.emplace(r.points[i], int(i)).second)
          fail(Errc::invalid_declaration, at_line(r.file, r.line) + "space '" + r.name +
                                              "' lists point '" + r.points[i] + "' twice");
      }
      if (r.points.size() > 64)
        fail(Errc::resource_cap,
             at_line(r.file, r.line) + "space '" + r.name + "' exceeds 64 points");
      std::vector<uint64_t> opens;
      for (const auto& members : r.opens) {
        uint64_t m = 0;
        for (const auto& p : members) {
          auto it = idx.find(p);
          if (it == idx.end())
            fail(Errc::unresolved_reference, at_line(r.file, r.line) + "space '" + r.name +
                                                 "' uses unknown point '" + p + "'");
          m |= uint64_t{1} << it->second;
        }
        opens.push_back(m);
      }
      try {
        w.spaces.push_back(
            {r.name, make_space(int(r.points.size()), opens, r.points, true), r.line});
      } catch (const ToolError& e) {
        fail(e.code(), at_line(r.file, r.line) + "space '" + r.name + "': " + e.detail());
      }
    }
  }

  void add_frames(const std::vector<RawFrame>& raws) {
    for (const auto& r : raws) {
      check_fresh("frame", r.name, w.frame_index(r.name), r.file, r.line);
      Frame f;
      try {
        switch (r.kind) {
          case RawFrame::Kind::chain:
            if (r.n < 1)
              fail(Errc::invalid_declaration, "a chain needs at least one element");
            f = chain_frame(int(r.n));
            f.names = default_names(f.size);
            break;
          case RawFrame::Kind::boolean_:
            if (r.n < 0) fail(Errc::invalid_declaration, "negative atom count");
            f = boolean_frame(int(r.n));
            f.names = default_names(f.size);
            break;
          case RawFrame::Kind::downsets: {
            int p = w.poset_index(r.ref);
            if (p < 0)
              fail(Errc::unresolved_reference, "unknown poset '" + r.ref + "'");
            f = downset_frame(w.posets[p].poset);
            f.names = default_names(f.size);
            break;
          }
          case RawFrame::Kind::opens: {
            int s = w.space_index(r.ref);
            if (s < 0)
              fail(Errc::unresolved_reference, "unknown space '" + r.ref + "'");
            f = opens_frame(w.spaces[s].space);
            f.names = default_names(f.size);
            break;
          }
          case RawFrame::Kind::order:
            f = build_frame_from_order(poset_from_raw(r.order, "frame '" + r.name + "'"));
            break;
        }
      } catch (const ToolError& e) {
        fail(e.code(),
             at_line(r.file, r.line) + "frame '" + r.name + "': " + e.detail());
      }
      w.frames.push_back({r.name, std::move(f), r.line});
    }
  }

  const FiniteRing& ring_by_name(const std::vector<RawRing>& raws, const std::string& name,
                                 const std::string& ref_file, int ref_line,
                                 std::set<std::string>& visiting) {
    int have = w.ring_index(name);
    if (have >= 0) return w.rings[have].ring;
    const RawRing* raw = nullptr;
    for (const auto& r : raws)
      if (r.name == name) raw = &r;
    if (!raw)
      fail(Errc::unresolved_reference,
           at_line(ref_file, ref_line) + "unknown ring '" + name + "'");
    if (!visiting.insert(name).second)
      fail(Errc::invalid_declaration,
           at_line(raw->file, raw->line) + "ring '" + name + "' depends on itself");
    build_ring(raws, *raw, visiting);
    visiting.erase(name);
    return w.rings[w.ring_index(name)].ring;
  }

  void build_ring(const std::vector<RawRing>& raws, const RawRing& r,
                  std::set<std::string>& visiting) {
    Workspace::RingEntry e;
    e.name = r.name;
    e.line = r.line;
    try {
      switch (r.kind) {
        case RawRing::Kind::cyclic:
          if (r.n < 1)
            fail(Errc::invalid_declaration, "modulus must be at least 1");
          e.ring = ring_cyclic(int(r.n));
          e.form = Workspace::RingEntry::Form::cyclic;
          e.modulus = int(r.n);
          break;
        case RawRing::Kind::product: {
          // materialize both operands before taking references: each build
          // may grow w.rings and relocate earlier entries
          ring_by_name(raws, r.left, r.file, r.line, visiting);
          ring_by_name(raws, r.right, r.file, r.line, visiting);
          const FiniteRing& a = w.rings[w.ring_index(r.left)].ring;
          const FiniteRing& b = w.rings[w.ring_index(r.right)].ring;
          e.ring = ring_product(a, b);
          e.form = Workspace::RingEntry::Form::product;
          e.left = r.left;
          e.right = r.right;
          break;
        }
        case RawRing::Kind::table: {
          e.form = Workspace::RingEntry::Form::table;
          int n = int(r.elements.size());
          std::map<std::string, int> idx;
          for (int i = 0; i < n; ++i)
            if (!idx.emplace(r.elements[i], i).second)
              fail(Errc::invalid_declaration,
                   "element '" + r.elements[i] + "' listed twice");
          auto fill = [&](const char* op,
                          const std::vector<std::pair<std::string, std::vector<std::string>>>& rows,
                          std::vector<int32_t>& table) {
            table.assign(size_t(n) * n, -1);
            std::set<int> done;
            for (const auto& [row, cells] : rows) {
              auto it = idx.find(row);
              if (it == idx.end())
                fail(Errc::unresolved_reference,
                     std::string(op) + " row names unknown element '" + row + "'");
              if (!done.insert(it->second).second)
                fail(Errc::invalid_declaration,
                     std::string(op) + " row for '" + row + "' appears twice");
              if (int(cells.size()) != n)
                fail(Errc::invalid_declaration, std::string(op) + " row for '" + row + "' has " +
                                                    std::to_string(cells.size()) +
                                                    " entries, expected " + std::to_string(n));
              for (int c = 0; c < n; ++c) {
                auto ct = idx.find(cells[c]);
                if (ct == idx.end())
                  fail(Errc::unresolved_reference,
                       std::string(op) + " row for '" + row + "' uses unknown element '" +
                           cells[c] + "'");
                table[size_t(it->second) * n + c] = int32_t(ct->second);
              }
            }
            if (int(done.size()) != n)
              fail(Errc::invalid_declaration,
                   std::string(op) + " table is missing rows (" + std::to_string(done.size()) +
                       " of " + std::to_string(n) + " given)");
          };
          std::vector<int32_t> add_t, mul_t;
          fill("add", r.add_rows, add_t);
          fill("mul", r.mul_rows, mul_t);
          e.ring = make_ring(n, std::move(add_t), std::move(mul_t), r.elements);
          break;
        }
      }
    } catch (const ToolError& e2) {
      std::string msg(e2.detail());
      if (msg.rfind(r.file + ":", 0) == 0) throw;  // already located
      fail(e2.code(), at_line(r.file, r.line) + "ring '" + r.name + "': " + msg);
    }
    w.rings.push_back(std::move(e));
  }

  void add_rings(const std::vector<RawRing>& raws) {
    std::set<std::string> seen;
    for (const auto& r : raws)
      if (!seen.insert(r.name).second)
        fail(Errc::duplicate_name,
             at_line(r.file, r.line) + "ring '" + r.name + "' is already declared");
    for (const auto& r : raws) {
      // a forward product reference may have built this one on demand
      if (w.ring_index(r.name) >= 0) continue;
      std::set<std::string> visiting{r.name};
      build_ring(raws, r, visiting);
    }
  }

  void add_maps(const std::vector<RawMap>& raws) {
    for (const auto& r : raws) {
      check_fresh("map", r.name, w.map_index(r.name), r.file, r.line);
      Workspace::MapEntry e;
      e.name = r.name;
      e.line = r.line;
      e.from = w.frame_index(r.from);
      if (e.from < 0)
        fail(Errc::unresolved_reference,
             at_line(r.file, r.line) + "map '" + r.name + "': unknown frame '" + r.from + "'");
      e.to = w.frame_index(r.to);
      if (e.to < 0)
        fail(Errc::unresolved_reference,
             at_line(r.file, r.line) + "map '" + r.name + "': unknown frame '" + r.to + "'");
      const Frame& dom = w.frames[e.from].frame;
      const Frame& cod = w.frames[e.to].frame;
      auto dom_idx = [&](const std::string& s) {
        for (int i = 0; i < dom.size; ++i)
          if (dom.names[i] == s) return i;
        return -1;
      };
      auto cod_idx = [&](const std::string& s) {
        for (int i = 0; i < cod.size; ++i)
          if (cod.names[i] == s) return i;
        return -1;
      };
      e.img.assign(dom.size, -1);
      for (size_t k = 0; k < r.assigns.size(); ++k) {
        const auto& [a, b] = r.assigns[k];
        std::string loc = at_line(r.file, r.assign_lines[k]) + "map '" + r.name + "': ";
        int ai = dom_idx(a);
        if (ai < 0)
          fail(Errc::unresolved_reference,
               loc + "'" + a + "' is not an element of '" + r.from + "'");
        int bi = cod_idx(b);
        if (bi < 0)
          fail(Errc::unresolved_reference,
               loc + "'" + b + "' is not an element of '" + r.to + "'");
        if (e.img[ai] >= 0 && e.img[ai] != bi)
          fail(Errc::invalid_declaration, loc + "element '" + a + "' is sent both to '" +
                                              cod.names[e.img[ai]] + "' and to '" + b + "'");
        e.img[ai] = bi;
      }
      // endpoints may be left implicit, but never contradicted
      std::string loc = at_line(r.file, r.line) + "map '" + r.name + "': ";
      if (e.img[dom.bottom] < 0) e.img[dom.bottom] = cod.bottom;
      else if (e.img[dom.bottom] != cod.bottom)
        fail(Errc::invalid_declaration,
             loc + "bottom must go to bottom, not to '" + cod.names[e.img[dom.bottom]] + "'");
      if (e.img[dom.top] < 0) e.img[dom.top] = cod.top;
      else if (e.img[dom.top] != cod.top)
        fail(Errc::invalid_declaration,
             loc + "top must go to top, not to '" + cod.names[e.img[dom.top]] + "'");
      for (int i = 0; i < dom.size; ++i)
        if (e.img[i] < 0)
          fail(Errc::invalid_declaration,
               loc + "no image given for element '" + dom.names[i] + "'");
      FrameMap fm{&dom, &cod, e.img};
      try {
        validate_frame_map(fm);
      } catch (const ToolError& e2) {
        fail(e2.code(), loc + e2.detail());
      }
      w.maps.push_back(std::move(e));
    }
  }

  void add_joins(const std::vector<RawJoins>& raws) {
    for (const auto& r : raws) {
      check_fresh("joins", r.name, w.joins_index(r.name), r.file, r.line);
      Workspace::JoinsEntry e;
      e.name = r.name;
      e.line = r.line;
      e.kind = r.kind;
      e.frame = w.frame_index(r.frame);
      if (e.frame < 0)
        fail(Errc::unresolved_reference,
             at_line(r.file, r.line) + "joins '" + r.name + "': unknown frame '" + r.frame + "'");
      const Frame& f = w.frames[e.frame].frame;
      auto elem_idx = [&](const std::string& s) {
        for (int i = 0; i < f.size; ++i)
          if (f.names[i] == s) return i;
        return -1;
      };
      for (size_t k = 0; k < r.entries.size(); ++k) {
        const auto& [target, parts] = r.entries[k];
        std::string loc = at_line(r.file, r.entry_lines[k]) + "joins '" + r.name + "': ";
        JoinEntry je;
        je.target = elem_idx(target);
        if (je.target < 0)
          fail(Errc::unresolved_reference,
               loc + "'" + target + "' is not an element of '" + r.frame + "'");
        je.parts = Bits(f.size);
        for (const auto& p : parts) {
          int pi = elem_idx(p);
          if (pi < 0)
            fail(Errc::unresolved_reference,
                 loc + "'" + p + "' is not an element of '" + r.frame + "'");
          je.parts.set(pi);
        }
        int got = join_all(f, je.parts);
        if (got != je.target)
          fail(Errc::invalid_declaration, loc + "the parts join to '" + f.names[got] +
                                              "', not to '" + target + "'");
        e.entries.push_back(std::move(je));
      }
      std::sort(e.entries.begin(), e.entries.end(), [](const JoinEntry& a, const JoinEntry& b) {
        if (a.target != b.target) return a.target < b.target;
        return canon_less(a.parts, b.parts);
      });
      e.entries.erase(std::unique(e.entries.begin(), e.entries.end(),
                                  [](const JoinEntry& a, const JoinEntry& b) {
                                    return a.target == b.target && a.parts == b.parts;
                                  }),
                      e.entries.end());
      w.joins.push_back(std::move(e));
    }
  }
};

// --------------------------------------------------------------- printing

void print_order_body(std::ostream& os, const Poset& p) {
  os << "{\n";
  for (int i = 0; i < p.size; ++i) os << "  " << p.names[i] << ";\n";
  for (const auto& [a, b] : cover_relation(p))
    os << "  " << p.names[a] << " < " << p.names[b] << ";\n";
  os << "}\n";
}

}  // namespace

int Workspace::poset_index(const std::string& n) const {
  for (size_t i = 0; i < posets.size(); ++i)
    if (posets[i].name == n) return int(i);
  return -1;
}
int Workspace::space_index(const std::string& n) const {
  for (size_t i = 0; i < spaces.size(); ++i)
    if (spaces[i].name == n) return int(i);
  return -1;
}
int Workspace::frame_index(const std::string& n) const {
  for (size_t i = 0; i < frames.size(); ++i)
    if (frames[i].name == n) return int(i);
  return -1;
}
int Workspace::ring_index(const std::string& n) const {
  for (size_t i = 0; i < rings.size(); ++i)
    if (rings[i].name == n) return int(i);
  return -1;
}
int Workspace::map_index(const std::string& n) const {
  for (size_t i = 0; i < maps.size(); ++i)
    if (maps[i].name == n) return int(i);
  return -1;
}
int Workspace::joins_index(const std::string& n) const {
  for (size_t i = 0; i < joins.size(); ++i)
    if (joins[i].name == n) return int(i);
  return -1;
}

Workspace parse_files(const std::vector<std::pair<std::string, std::string>>& sources) {
  RawFile raw;
  for (const auto& [file, text] : sources) {
    Parser p(text, file, raw);
    p.run();
  }
  Builder b;
  b.add_posets(raw.posets);
  b.add_spaces(raw.spaces);
  b.add_frames(raw.frames);
  b.add_rings(raw.rings);
  b.add_maps(raw.maps);
  b.add_joins(raw.joins);
  return std::move(b.w);
}

Workspace parse_workspace(const std::string& text, const std::string& filename) {
  return parse_files({{filename, text}});
}

std::string print_canonical(const Workspace& w) {
  std::ostringstream os;

  std::vector<const Workspace::PosetEntry*> ps;
  for (const auto& e : w.posets) ps.push_back(&e);
  std::sort(ps.begin(), ps.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (auto* e : ps) {
    os << "poset " << e->name << " ";
    print_order_body(os, e->poset);
  }

  std::vector<const Workspace::SpaceEntry*> ss;
  for (const auto& e : w.spaces) ss.push_back(&e);
  std::sort(ss.begin(), ss.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (auto* e : ss) {
    const FiniteSpace& x = e->space;
    os << "space " << e->name << " {\n  points";
    for (int i = 0; i < x.points; ++i) os << " " << x.names[i];
    os << ";\n";
    for (uint64_t m : x.opens) {
      if (m == 0 || m == x.full_mask()) continue;
      os << "  open {";
      for (int i = 0; i < x.points; ++i)
        if (m >> i & 1) os << " " << x.names[i];
      os << " };\n";
    }
    os << "}\n";
  }

  std::vector<const Workspace::FrameEntry*> fs;
  for (const auto& e : w.frames) fs.push_back(&e);
  std::sort(fs.begin(), fs.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (auto* e : fs) {
    os << "frame " << e->name << " = order ";
    print_order_body(os, frame_order(e->frame));
  }

  std::vector<const Workspace::RingEntry*> rs;
  for (const auto& e : w.rings) rs.push_back(&e);
  std::sort(rs.begin(), rs.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (auto* e : rs) {
    os << "ring " << e->name << " = ";
    switch (e->form) {
      case Workspace::RingEntry::Form::cyclic:
        os << "Z / " << e->modulus << "\n";
        break;
      case Workspace::RingEntry::Form::product:
        os << "product " << e->left << " " << e->right << "\n";
        break;
      case Workspace::RingEntry::Form::table: {
        const FiniteRing& r = e->ring;
        os << "table {\n  elements";
        for (int i = 0; i < r.size; ++i) os << " " << r.names[i];
        os << ";\n";
        for (int i = 0; i < r.size; ++i) {
          os << "  add " << r.names[i] << " {";
          for (int j = 0; j < r.size; ++j) os << " " << r.names[r.add(i, j)];
          os << " };\n";
        }
        for (int i = 0; i < r.size; ++i) {
          os << "  mul " << r.names[i] << " {";
          for (int j = 0; j < r.size; ++j) os << " " << r.names[r.mul(i, j)];
          os << " };\n";
        }
        os << "}\n";
        break;
      }
    }
  }

  std::vector<const Workspace::MapEntry*> msv;
  for (const auto& e : w.maps) msv.push_back(&e);
  std::sort(msv.begin(), msv.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (auto* e : msv) {
    const Frame& dom = w.frames[e->from].frame;
    const Frame& cod = w.frames[e->to].frame;
    os << "map " << e->name << " : " << w.frames[e->from].name << " -> "
       << w.frames[e->to].name << " {\n";
    for (int i = 0; i < dom.size; ++i)
      os << "  " << dom.names[i] << " -> " << cod.names[e->img[i]] << ";\n";
    os << "}\n";
  }

  std::vector<const Workspace::JoinsEntry*> js;
  for (const auto& e : w.joins) js.push_back(&e);
  std::sort(js.begin(), js.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (auto* e : js) {
    const Frame& f = w.frames[e->frame].frame;
    os << "joins " << e->name << " on " << w.frames[e->frame].name << " = ";
    if (e->kind == Workspace::JoinsEntry::Kind::full) {
      os << "full\n";
      continue;
    }
    os << (e->kind == Workspace::JoinsEntry::Kind::full_except ? "full except" : "only")
       << " {\n";
    for (const auto& je : e->entries) {
      os << "  " << f.names[je.target] << " <- {";
      for (int i = 0; i < f.size; ++i)
        if (je.parts.test(i)) os << " " << f.names[i];
      os << " };\n";
    }
    os << "}\n";
  }

  return os.str();
}

FrameMap workspace_map(const Workspace& w, const Workspace::MapEntry& m) {
  return FrameMap{&w.frames[m.from].frame, &w.frames[m.to].frame, m.img};
}

GroundJoinFamily workspace_family(const Workspace& w, const Workspace::JoinsEntry& j) {
  const Frame& f = w.frames[j.frame].frame;
  if (j.kind == Workspace::JoinsEntry::Kind::only) {
    GroundJoinFamily fam;
    fam.frame_size = f.size;
    fam.entries = j.entries;
    validate_family(f, fam);
    return fam;
  }
  GroundJoinFamily fam = full_join_family(f);
  if (j.kind == Workspace::JoinsEntry::Kind::full_except) {
    auto drop = [&](const JoinEntry& je) {
      for (const auto& ex : j.entries)
        if (ex.target == je.target && ex.parts == je.parts) return true;
      return false;
    };
    fam.entries.erase(std::remove_if(fam.entries.begin(), fam.entries.end(), drop),
                      fam.entries.end());
  }
  return fam;
}

}  // namespace loctk
