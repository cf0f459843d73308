#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace karelsem {

// ---------------------------------------------------------------------------
// World
// ---------------------------------------------------------------------------

// Robot heading. The numeric values double as classification label codes.
enum class Direction : uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr int kNumDirections = 4;
inline constexpr int kMaxMarkers = 10;

Direction turn_left(Direction d);
Direction turn_right(Direction d);
const char* to_string(Direction d);

struct Cell {
  bool obstacle = false;
  uint8_t markers = 0;  // in [0, kMaxMarkers]; always 0 on obstacles

  bool operator==(const Cell&) const = default;
};

struct WorldState {
  int rows = 0;
  int cols = 0;
  std::vector<Cell> cells;  // row-major, rows * cols entries
  int robot_row = 0;        // row 0 is the top edge; North decreases the row
  int robot_col = 0;
  Direction facing = Direction::North;

  Cell& at(int r, int c) { return cells[static_cast<size_t>(r) * cols + c]; }
  const Cell& at(int r, int c) const { return cells[static_cast<size_t>(r) * cols + c]; }
  bool in_bounds(int r, int c) const { return r >= 0 && r < rows && c >= 0 && c < cols; }

  bool operator==(const WorldState&) const = default;
};

// Makes an empty rows x cols world with the robot at (0,0) facing North.
WorldState make_world(int rows, int cols);

// ---------------------------------------------------------------------------
// Programs
// ---------------------------------------------------------------------------

enum class Op : uint8_t { Move = 0, TurnRight = 1, TurnLeft = 2, PickMarker = 3, PutMarker = 4 };

inline constexpr int kNumOps = 5;
inline constexpr std::array<Op, kNumOps> kAllOps = {Op::Move, Op::TurnRight, Op::TurnLeft,
                                                    Op::PickMarker, Op::PutMarker};

const char* to_string(Op op);
std::optional<Op> op_from_string(std::string_view s);

using Program = std::vector<Op>;

std::string to_string(const Program& p);

// ---------------------------------------------------------------------------
// Concrete semantics
// ---------------------------------------------------------------------------

// Executes one operation. Total: a move blocked by an obstacle or the grid
// boundary keeps the pose; pickMarker at 0 and putMarker at kMaxMarkers are
// no-ops. The input state is never mutated.
WorldState step(const WorldState& s, Op op);

// states[0] = input, states[i] = step(states[i-1], p[i-1]).
using Trace = std::vector<WorldState>;

Trace run_trace(const Program& p, const WorldState& input);

// ---------------------------------------------------------------------------
// Facing-direction abstraction
// ---------------------------------------------------------------------------

using AbstractState = Direction;

// Projection onto the robot's heading.
AbstractState abstract_state(const WorldState& s);

// Abstract semantics: the turns rotate, everything else is the identity.
AbstractState abstract_step(AbstractState a, Op op);

// ---------------------------------------------------------------------------
// Alternative semantics
// ---------------------------------------------------------------------------

// Reassignment of operation meanings: executing `op` applies the concrete
// semantics of `image[op]` instead.
struct SemanticsMap {
  std::string name;
  std::array<Op, kNumOps> image{};

  Op operator()(Op op) const { return image[static_cast<size_t>(op)]; }
  Program apply(const Program& p) const;
  bool is_bijection() const;
};

SemanticsMap identity_semantics();
SemanticsMap opposite_semantics();  // total but not injective
SemanticsMap swap_semantics();
SemanticsMap shift_semantics();
SemanticsMap random_semantics();

// The four intervention variants: opposite, swap, shift, random.
const std::vector<SemanticsMap>& alternative_semantics();
std::optional<SemanticsMap> semantics_by_name(std::string_view name);

// Traces p on input while interpreting every operation under `sem`.
// Equivalent to run_trace(sem.apply(p), input); implemented as a direct
// interpreter so that equivalence is a checkable property.
Trace retrace_alternative(const Program& p, const WorldState& input, const SemanticsMap& sem);

// ---------------------------------------------------------------------------
// Observations
// ---------------------------------------------------------------------------

// What the textual rendering of a grid shows for one cell. The robot's cell
// shows only its heading; the marker count beneath it is hidden.
enum class ObsCell : uint8_t {
  Empty = 0,
  Wall = 1,
  Marker1 = 2,  // Marker1..Marker10 occupy codes 2..11
  RobotNorth = 12,
  RobotEast = 13,
  RobotSouth = 14,
  RobotWest = 15,
};

inline constexpr int kNumObsCells = 16;

ObsCell marker_obs(int count);          // count in [1, kMaxMarkers]
ObsCell robot_obs(Direction d);
bool is_robot_obs(ObsCell c);
Direction robot_obs_direction(ObsCell c);
int marker_obs_count(ObsCell c);        // 0 unless c is a marker code

struct Observation {
  int rows = 0;
  int cols = 0;
  std::vector<ObsCell> cells;  // row-major

  bool operator==(const Observation&) const = default;
};

Observation observe(const WorldState& s);

// Inverse of observe up to the hidden markers: the robot's cell decodes to 0
// markers. Throws std::invalid_argument if there is not exactly one robot.
WorldState decode_observation(const Observation& o);

// ---------------------------------------------------------------------------
// Specifications
// ---------------------------------------------------------------------------

using IoPair = std::pair<Observation, Observation>;
using Spec = std::vector<IoPair>;

// True iff running p on every decoded input reproduces the output observation
// token for token. Comparing observations means markers hidden under the
// robot cannot affect the verdict.
bool check_correct(const Program& p, const Spec& spec);

}  // namespace karelsem
