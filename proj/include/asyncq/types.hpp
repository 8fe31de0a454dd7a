#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace asyncq {

using ProcessId = std::uint32_t;
using SimTime = std::int64_t;

// Configuration mistakes: bad n/k, length mismatches, malformed workloads.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A state-machine invariant broke. The run is not salvageable; fail loudly
// instead of silently reordering.
struct ProtocolViolation : std::logic_error {
    explicit ProtocolViolation(const std::string& what) : std::logic_error(what) {}
};

// The user side of the contract broke: overlapping invocations at one process.
struct UserContractError : std::logic_error {
    explicit UserContractError(const std::string& what) : std::logic_error(what) {}
};

enum class OpKind : std::uint8_t { Enqueue, Dequeue };

// Confirmation-list flavor. Plain is the unrelaxed algorithm's only kind;
// Fast/Slow belong to the relaxed algorithm.
enum class DequeueKind : std::uint8_t { Plain, Fast, Slow };

// Every enqueued value is (enqueuer, per-process sequence number), which makes
// argument uniqueness constructive.
struct Value {
    ProcessId enqueuer = 0;
    std::uint64_t seq = 0;

    friend bool operator==(const Value&, const Value&) = default;
    friend auto operator<=>(const Value&, const Value&) = default;

    std::string str() const {
        return "p" + std::to_string(enqueuer) + ":" + std::to_string(seq);
    }
    static std::optional<Value> parse(const std::string& s);
};

inline std::optional<Value> Value::parse(const std::string& s) {
    if (s.size() < 4 || s[0] != 'p') return std::nullopt;
    auto colon = s.find(':');
    if (colon == std::string::npos) return std::nullopt;
    try {
        Value v;
        v.enqueuer = static_cast<ProcessId>(std::stoul(s.substr(1, colon - 1)));
        v.seq = std::stoull(s.substr(colon + 1));
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace asyncq
