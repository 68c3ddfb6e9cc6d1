#pragma once

// Integral laminations on the N-punctured disk in Dynnikov coordinates
// (a_1, b_1, ..., a_{N-2}, b_{N-2}), the braid action on them, round
// multicurves, and the Nielsen-Thurston type of a braid.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidforce/braid.hpp"
#include "braidforce/garside.hpp"

namespace braidforce {

class LaminationCoords {
 public:
  explicit LaminationCoords(int punctures = 3);
  LaminationCoords(int punctures, std::vector<long> coords);

  int punctures() const { return punctures_; }
  const std::vector<long>& coords() const { return coords_; }
  // 1-based, 1 <= i <= punctures-2
  long a(int i) const { return coords_[2 * (i - 1)]; }
  long b(int i) const { return coords_[2 * (i - 1) + 1]; }
  bool is_empty() const;
  std::string to_string() const;

  friend bool operator==(const LaminationCoords&, const LaminationCoords&) = default;
  friend LaminationCoords operator+(const LaminationCoords& x, const LaminationCoords& y);

 private:
  int punctures_;
  std::vector<long> coords_;
};

// Intersection numbers with the vertical arcs beta_1..beta_{N-1} between
// neighbouring punctures, and with the arcs from punctures 2..N-1 to the top
// and to the bottom of the disk.
struct Intersections {
  std::vector<long> beta;
  std::vector<long> up;
  std::vector<long> down;
};

Intersections intersections(const LaminationCoords& c);
// Rebuilds the lamination from its normal arcs and counts closed components.
// Throws ValidationError when the arcs do not glue.
int component_count(const LaminationCoords& c);

LaminationCoords act(const LaminationCoords& c, const BraidWord& a);
LaminationCoords act(const LaminationCoords& c, const Letter& l);

struct RoundMulticurve {
  int punctures = 3;
  std::vector<std::pair<int, int>> blocks;  // [a, b], sorted

  // Sorts blocks and checks bounds, sizes and non-crossing.
  void validate() const;
  std::string to_string() const;  // {[1,2],[4,6]}

  friend bool operator==(const RoundMulticurve&, const RoundMulticurve&) = default;
};

LaminationCoords round_coords(const RoundMulticurve& r);

// The first permutation orbit of round curves, in (a, b) order of its first
// block, whose union is preserved by a.
std::optional<RoundMulticurve> invariant_round_multicurve(const BraidWord& a);

bool is_reducible(const BraidWord& a, const SummitOptions& opts = {});

enum class ThurstonType { periodic, reducible, pseudo_anosov };
std::string to_string(ThurstonType t);

ThurstonType thurston_type(const BraidWord& a, const SummitOptions& opts = {});

}  // namespace braidforce
