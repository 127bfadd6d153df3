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

#include "bdmbt/schedule.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "bdmbt/errors.hpp"
#include "text_util.hpp"

namespace bdmbt {

Schedule::Schedule(VertexId source, int horizon, std::vector<Call> calls)
    : source_(source), horizon_(horizon), calls_(std::move(calls)) {
    if (horizon < 0) {
        throw InvalidInput("negative horizon");
    }
    for (const Call &c : calls_) {
        if (c.round < 1 || c.round > horizon) {
            throw InvalidInput("call in round " + std::to_string(c.round) + " outside 1.." +
                               std::to_string(horizon));
        }
        if (c.caller == c.callee) {
            throw InvalidInput("call from vertex " + std::to_string(c.caller) + " to itself");
        }
    }
    std::sort(calls_.begin(), calls_.end());
}

std::string_view to_string(Failure failure) {
    switch (failure) {
    case Failure::None:
        return "none";
    case Failure::EdgeNotInGraph:
        return "edge-not-in-graph";
    case Failure::CallerUninformed:
        return "caller-uninformed";
    case Failure::CalleeAlreadyInformed:
        return "callee-already-informed";
    case Failure::EndpointConflict:
        return "endpoint-conflict";
    case Failure::IncompleteCoverage:
        return "incomplete-coverage";
    case Failure::DeadlineExceeded:
        return "deadline-exceeded";
    }
    return "unknown";
}

VerificationReport simulate(const Graph &g, const Schedule &schedule) {
    const std::size_t n = g.vertex_count();
    if (schedule.source() >= n) {
        throw InvalidInput("schedule source " + std::to_string(schedule.source()) + " is not a vertex");
    }
    for (const Call &c : schedule.calls()) {
        if (c.caller >= n || c.callee >= n) {
            throw InvalidInput("call " + std::to_string(c.caller) + " -> " + std::to_string(c.callee) +
                               " names a vertex outside the graph");
        }
    }

    VerificationReport report;
    report.informed_time.assign(n, std::nullopt);
    report.informed_time[schedule.source()] = 0;
    std::size_t informed = 1;
    int completion = 0;

    // busy[v] == round marks v as an endpoint of a call already placed this round.
    std::vector<int> busy(n, 0);

    auto fail = [&](Failure f, const Call &c) {
        report.valid = false;
        report.failure = f;
        report.offending_call = c;
        return report;
    };

    for (const Call &c : schedule.calls()) {
        if (!g.has_edge(c.caller, c.callee)) {
            return fail(Failure::EdgeNotInGraph, c);
        }
        const auto &caller_time = report.informed_time[c.caller];
        if (!caller_time || *caller_time >= c.round) {
            return fail(Failure::CallerUninformed, c);
        }
        const auto &callee_time = report.informed_time[c.callee];
        if (callee_time && *callee_time < c.round) {
            return fail(Failure::CalleeAlreadyInformed, c);
        }
        if (busy[c.caller] == c.round || busy[c.callee] == c.round) {
            return fail(Failure::EndpointConflict, c);
        }
        busy[c.caller] = c.round;
        busy[c.callee] = c.round;
        report.informed_time[c.callee] = c.round;
        ++informed;
        completion = std::max(completion, c.round);
    }

    if (informed != n) {
        report.valid = false;
        report.failure = Failure::IncompleteCoverage;
        return report;
    }
    report.valid = true;
    report.failure = Failure::None;
    report.completion_time = completion;
    return report;
}

VerificationReport verify_schedule(const Graph &g, const Schedule &schedule, std::optional<int> deadline) {
    auto report = simulate(g, schedule);
    if (report.valid && deadline && *report.completion_time > *deadline) {
        report.valid = false;
        report.failure = Failure::DeadlineExceeded;
    }
    return report;
}

Schedule parse_schedule(std::istream &in) {
    std::optional<std::pair<VertexId, int>> header;
    std::vector<Call> calls;

    detail::LineReader reader(in);
    while (auto line = reader.next()) {
        auto tokens = detail::split(*line);
        const std::size_t at = reader.line_number();
        if (tokens[0] == "s") {
            if (header) {
                throw ParseError(at, "duplicate 's' line");
            }
            if (tokens.size() != 3) {
                throw ParseError(at, "expected 's <source> <horizon>'");
            }
            const auto source = detail::parse_unsigned(tokens[1], at);
            const auto horizon = detail::parse_unsigned(tokens[2], at);
            header.emplace(static_cast<VertexId>(source), static_cast<int>(horizon));
        } else if (tokens[0] == "c") {
            if (tokens.size() != 4) {
                throw ParseError(at, "expected 'c <round> <caller> <callee>'");
            }
            Call c;
            c.round = static_cast<int>(detail::parse_unsigned(tokens[1], at));
            c.caller = static_cast<VertexId>(detail::parse_unsigned(tokens[2], at));
            c.callee = static_cast<VertexId>(detail::parse_unsigned(tokens[3], at));
            if (c.round < 1) {
                throw ParseError(at, "rounds start at 1");
            }
            if (c.caller == c.callee) {
                throw ParseError(at, "call from a vertex to itself");
            }
            calls.push_back(c);
        } else {
            throw ParseError(at, "unknown line type '" + tokens[0] + "'");
        }
    }
    if (!header) {
        throw ParseError("missing 's <source> <horizon>' line");
    }
    for (const Call &c : calls) {
        if (c.round > header->second) {
            throw ParseError("call in round " + std::to_string(c.round) + " exceeds horizon " +
                             std::to_string(header->second));
        }
    }
    return Schedule(header->first, header->second, std::move(calls));
}

Schedule parse_schedule(const std::string &text) {
    std::istringstream in(text);
    return parse_schedule(in);
}

void write_schedule(std::ostream &out, const Schedule &schedule) {
    out << "s " << schedule.source() << ' ' << schedule.horizon() << '\n';
    for (const Call &c : schedule.calls()) {
        out << "c " << c.round << ' ' << c.caller << ' ' << c.callee << '\n';
    }
}

std::string serialize_schedule(const Schedule &schedule) {
    std::ostringstream out;
    write_schedule(out, schedule);
    return out.str();
}

} // namespace bdmbt
