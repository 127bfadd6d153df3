/*
Copyright 2026 The bdmbt Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdmbt/graph.hpp"

namespace bdmbt {

/// One unit-time call: `caller` passes the message to `callee` in `round`.
struct Call {
    int round = 0;
    VertexId caller = 0;
    VertexId callee = 0;

    auto operator<=>(const Call &) const = default;
};

/// A broadcast schedule from `source` over rounds 1..horizon.
///
/// Calls are kept sorted by (round, caller, callee). Empty rounds are fine;
/// the informed sets are derived by simulate(), never stored.
class Schedule {
  public:
    Schedule() = default;
    /// Throws InvalidInput when a call names round 0, a round past the
    /// horizon, or the same vertex on both ends.
    Schedule(VertexId source, int horizon, std::vector<Call> calls = {});

    VertexId source() const { return source_; }
    int horizon() const { return horizon_; }
    const std::vector<Call> &calls() const { return calls_; }

    bool operator==(const Schedule &) const = default;

  private:
    VertexId source_ = 0;
    int horizon_ = 0;
    std::vector<Call> calls_;
};

enum class Failure {
    None,
    EdgeNotInGraph,
    CallerUninformed,
    CalleeAlreadyInformed,
    EndpointConflict,
    IncompleteCoverage,
    DeadlineExceeded,
};

std::string_view to_string(Failure failure);

struct VerificationReport {
    bool valid = false;
    Failure failure = Failure::None;
    /// Last round in which a vertex became informed; set when valid.
    std::optional<int> completion_time;
    /// Round in which each vertex was informed (0 for the source).
    std::vector<std::optional<int>> informed_time;
    /// The call that broke a per-call condition, if any.
    std::optional<Call> offending_call;
};

/// Replays the schedule round by round and stops at the first broken
/// condition. A call is legal when its edge exists, its caller was informed
/// before the round, its callee was not, and neither endpoint is already in
/// another call that round.
///
/// Throws InvalidInput for a schedule that names vertices outside `g`.
VerificationReport simulate(const Graph &g, const Schedule &schedule);

/// simulate() plus an optional completion deadline. Linear in |V| + |E| + calls.
VerificationReport verify_schedule(const Graph &g, const Schedule &schedule,
                                   std::optional<int> deadline = std::nullopt);

// Line format: "s <source> <horizon>", then "c <round> <caller> <callee>" in any order.
Schedule parse_schedule(std::istream &in);
Schedule parse_schedule(const std::string &text);
void write_schedule(std::ostream &out, const Schedule &schedule);
std::string serialize_schedule(const Schedule &schedule);

} // namespace bdmbt
