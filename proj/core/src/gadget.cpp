#include "gadgetforge/gadget.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gadgetforge/akari.hpp"
#include "gadgetforge/hexcells.hpp"
#include "gadgetforge/hexiom.hpp"

namespace gf {

const char* target_name(Target t) {
  switch (t) {
    case Target::AkariSquare: return "akari-square";
    case Target::AkariHex: return "akari-hex";
    case Target::AkariTri: return "akari-tri";
    case Target::HexCells: return "hexcells";
    case Target::Hexiom: return "hexiom";
  }
  return "?";
}

Target target_from_name(const std::string& name) {
  for (Target t : {Target::AkariSquare, Target::AkariHex, Target::AkariTri,
                   Target::HexCells, Target::Hexiom})
    if (name == target_name(t)) return t;
  throw std::runtime_error("unknown target: " + name);
}

GridKind target_grid(Target t) {
  switch (t) {
    case Target::AkariSquare: return GridKind::Square;
    case Target::AkariHex:
    case Target::HexCells:
    case Target::Hexiom: return GridKind::Hex;
    case Target::AkariTri: return GridKind::Tri;
  }
  return GridKind::Square;
}

int GadgetTemplate::num_inputs() const {
  int n = 0;
  for (const auto& p : ports) n += p.is_input;
  return n;
}

int GadgetTemplate::num_outputs() const {
  return static_cast<int>(ports.size()) - num_inputs();
}

const GadgetPort& GadgetTemplate::input(int k) const {
  for (const auto& p : ports)
    if (p.is_input && k-- == 0) return p;
  throw std::runtime_error("missing input port");
}

const GadgetPort& GadgetTemplate::output(int k) const {
  for (const auto& p : ports)
    if (!p.is_input && k-- == 0) return p;
  throw std::runtime_error("missing output port");
}

namespace {

Coord add(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }
Coord mul(Coord a, int k) { return {a.x * k, a.y * k}; }

Coord square_rot(Coord c) { return {-c.y, c.x}; }          // 90 degrees CCW
Coord hex_rot(Coord c) { return {-c.y, c.x + c.y}; }       // 60 degrees
Coord square_mirror(Coord c) { return {-c.x, c.y}; }
Coord hex_mirror(Coord c) { return {c.y, c.x}; }

}  // namespace

Coord transform_dir(GridKind kind, const GridTransform& tr, Coord d) {
  Coord c = d;
  switch (kind) {
    case GridKind::Square:
      if (tr.mirror) c = square_mirror(c);
      for (int i = 0; i < tr.rot % 4; ++i) c = square_rot(c);
      return c;
    case GridKind::Hex:
      if (tr.mirror) c = hex_mirror(c);
      for (int i = 0; i < tr.rot % 6; ++i) c = hex_rot(c);
      return c;
    case GridKind::Tri: {
      // Linear part only: mirror flips x; the 180-degree rotation flips
      // both axes.
      if (tr.mirror) c = {-c.x, c.y};
      if (tr.rot % 2 == 1) c = {-c.x, -c.y};
      return c;
    }
  }
  return c;
}

Coord transform_cell(GridKind kind, const GridTransform& tr, Coord c) {
  if (kind != GridKind::Tri) return transform_dir(kind, tr, c);
  // Tri transforms that flip the vertical axis must also flip cell
  // orientation, which the +1 offset on y provides (parity change).
  Coord out = c;
  if (tr.mirror) out = {-out.x, out.y};
  if (tr.rot % 2 == 1) out = {-out.x, 1 - out.y};
  return out;
}

GadgetTemplate transform_template(const GadgetTemplate& t, const GridTransform& tr) {
  GridKind kind = target_grid(t.target);
  GadgetTemplate out = t;
  out.cells.clear();
  for (const auto& [c, v] : t.cells) out.cells[transform_cell(kind, tr, c)] = v;
  for (auto& p : out.ports) {
    p.cell = transform_cell(kind, tr, p.cell);
    p.dir = transform_dir(kind, tr, p.dir);
  }
  return out;
}

namespace {

struct Bounds {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool empty = true;
  void grow(Coord c) {
    if (empty) {
      x0 = x1 = c.x;
      y0 = y1 = c.y;
      empty = false;
      return;
    }
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
};

struct StampPlan {
  std::map<Coord, int> cells;            // footprint + stub constraint cells
  std::vector<Coord> out_read;           // cells whose occupancy is the output bit
  GridSpec grid;
};

// Lays out the footprint plus per-port stubs and clamps.
StampPlan plan_board(const GadgetTemplate& t, unsigned input_bits) {
  StampPlan plan;
  plan.cells = t.cells;
  int in_idx = 0;
  for (const auto& p : t.ports) {
    if (p.is_input) {
      bool bit = (input_bits >> in_idx++) & 1u;
      switch (p.flavor) {
        case PortFlavor::PairCell: {
          Coord u = add(p.cell, p.dir);
          Coord clamp = add(p.cell, mul(p.dir, 2));
          plan.cells[u] = kFreeCell;
          plan.cells[clamp] = bit ? 1 : 0;
          break;
        }
        case PortFlavor::ChainCell: {
          // The upstream coupler reads this template's first chain cell;
          // clamp it directly: [1] forces the true position, [0] forbids
          // it (the side clue then forces the false position).
          Coord clamp = add(p.cell, p.dir);
          plan.cells[clamp] = bit ? 1 : 0;
          break;
        }
        case PortFlavor::ChainJunction: {
          // Upstream trailing coupler at p.cell reads its own chain cell
          // (further along dir) plus this template's cells.
          Coord k = p.cell;
          Coord b = add(p.cell, p.dir);
          Coord clamp = add(p.cell, mul(p.dir, 2));
          plan.cells[k] = 1;
          plan.cells[b] = kFreeCell;
          plan.cells[clamp] = bit ? 0 : 1;  // true <=> upstream B empty
          break;
        }
        case PortFlavor::ChainExpect:
          throw std::runtime_error("ChainExpect is an output flavor");
      }
    } else {
      switch (p.flavor) {
        case PortFlavor::PairCell:
          plan.cells[add(p.cell, p.dir)] = kFreeCell;
          plan.out_read.push_back(p.cell);
          break;
        case PortFlavor::ChainExpect:
          plan.cells[p.cell] = kFreeCell;
          plan.out_read.push_back(p.cell);
          break;
        default:
          throw std::runtime_error("unsupported output flavor");
      }
    }
  }
  Bounds b;
  for (const auto& [c, v] : plan.cells) {
    (void)v;
    b.grow(c);
  }
  plan.grid = GridSpec{target_grid(t.target), b.x0 - 1, b.y0 - 1,
                       (b.x1 - b.x0) + 3, (b.y1 - b.y0) + 3};
  return plan;
}

unsigned read_outputs_set(const StampPlan& plan, const std::set<Coord>& occupied) {
  unsigned bits = 0;
  for (std::size_t k = 0; k < plan.out_read.size(); ++k)
    if (occupied.count(plan.out_read[k])) bits |= (1u << k);
  return bits;
}

}  // namespace

GadgetEnumResult enumerate_gadget(const GadgetTemplate& t, unsigned input_bits) {
  StampPlan plan = plan_board(t, input_bits);
  GadgetEnumResult res;
  switch (t.target) {
    case Target::AkariSquare:
    case Target::AkariHex:
    case Target::AkariTri: {
      auto board = AkariBoard::filled(plan.grid, AkariCellKind::Obstacle);
      for (const auto& [c, v] : plan.cells) {
        if (v == kFreeCell)
          board.set(c, AkariCellKind::Empty);
        else if (v >= 0)
          board.set(c, AkariCellKind::Clue, v);
      }
      for (const auto& lamps : enumerate_akari_solutions(board)) {
        std::set<Coord> occ(lamps.begin(), lamps.end());
        unsigned bits = read_outputs_set(plan, occ);
        res.outputs.push_back(bits);
        res.output_set.insert(bits);
      }
      break;
    }
    case Target::HexCells: {
      auto board = HexCellsBoard::filled(plan.grid, HexCellsKind::Wall);
      for (const auto& [c, v] : plan.cells) {
        if (v == kFreeCell)
          board.set(c, HexCellsKind::Unrevealed);
        else if (v >= 0)
          board.set(c, HexCellsKind::Clue, v);
      }
      for (const auto& bombs : enumerate_hexcells_solutions(board, true)) {
        unsigned bits = read_outputs_set(plan, bombs);
        res.outputs.push_back(bits);
        res.output_set.insert(bits);
      }
      break;
    }
    case Target::Hexiom: {
      auto board = HexiomBoard::filled(plan.grid, HexiomKind::Wall);
      for (const auto& [c, v] : plan.cells) {
        if (v == kFreeCell)
          board.set(c, HexiomKind::Slot);
        else if (v >= 0)
          board.set(c, HexiomKind::Fixed, v);
      }
      for (const auto& placement : enumerate_hexiom_pool(board)) {
        std::set<Coord> occ;
        std::vector<int> pieces;
        for (const auto& [c, num] : placement) {
          occ.insert(c);
          pieces.push_back(num);
        }
        std::sort(pieces.begin(), pieces.end());
        unsigned bits = read_outputs_set(plan, occ);
        res.outputs.push_back(bits);
        res.output_set.insert(bits);
        res.used_pieces.push_back(std::move(pieces));
      }
      break;
    }
  }
  return res;
}

const std::vector<GadgetTemplate>& catalog_square();
const std::vector<GadgetTemplate>& catalog_hex();
const std::vector<GadgetTemplate>& catalog_tri();
const std::vector<GadgetTemplate>& catalog_hexcells();
const std::vector<GadgetTemplate>& catalog_hexiom();

const std::vector<GadgetTemplate>& catalog(Target target) {
  switch (target) {
    case Target::AkariSquare: return catalog_square();
    case Target::AkariHex: return catalog_hex();
    case Target::AkariTri: return catalog_tri();
    case Target::HexCells: return catalog_hexcells();
    case Target::Hexiom: return catalog_hexiom();
  }
  throw std::runtime_error("bad target");
}

const GadgetTemplate& find_template(Target target, const std::string& name) {
  for (const auto& t : catalog(target))
    if (t.name == name) return t;
  throw std::runtime_error(std::string("no template ") + name + " for " +
                           target_name(target));
}

std::string catalog_json(Target target) {
  std::ostringstream out;
  out << "{\n  \"target\": \"" << target_name(target) << "\",\n  \"gadgets\": [\n";
  const auto& cat = catalog(target);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& t = cat[i];
    out << "    {\"name\": \"" << t.name << "\", \"cells\": [";
    bool first = true;
    for (const auto& [c, v] : t.cells) {
      if (!first) out << ", ";
      first = false;
      out << "[" << c.x << "," << c.y << "," << v << "]";
    }
    out << "], \"ports\": [";
    first = true;
    for (const auto& p : t.ports) {
      if (!first) out << ", ";
      first = false;
      out << "{\"name\": \"" << p.name << "\", \"cell\": [" << p.cell.x << ","
          << p.cell.y << "], \"dir\": [" << p.dir.x << "," << p.dir.y
          << "], \"input\": " << (p.is_input ? "true" : "false") << "}";
    }
    out << "]";
    if (!t.balance_fixed.empty() || !t.balance_free.empty()) {
      out << ", \"balance_fixed\": [";
      for (std::size_t k = 0; k < t.balance_fixed.size(); ++k)
        out << (k ? "," : "") << t.balance_fixed[k];
      out << "], \"balance_free\": [";
      for (std::size_t k = 0; k < t.balance_free.size(); ++k)
        out << (k ? "," : "") << t.balance_free[k];
      out << "]";
    }
    out << "}" << (i + 1 < cat.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

}  // namespace gf
