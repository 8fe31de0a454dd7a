#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "asyncq/types.hpp"
#include "asyncq/vector_clock.hpp"

namespace asyncq {

struct ReplicaEntry {
    Value value;
    ProcessId enqueuer = 0;
    VectorTimestamp ts;
    // Ownership mark for fast dequeues. Once set it is never changed or
    // cleared; an entry leaves the queue with its label intact.
    std::optional<ProcessId> label;
};

// Per-process replica of the shared queue: entries kept in increasing
// lexicographic timestamp order. Timestamps are unique across entries, so the
// order is total; two distinct entries with equal timestamps abort the run.
class LocalQueue {
public:
    void insert_by_ts(const Value& value, ProcessId enqueuer, const VectorTimestamp& ts);

    // Removes and returns the lex-smallest entry with ts below `bound`.
    // Labeled entries are eligible; the unrelaxed algorithm has no labels.
    std::optional<ReplicaEntry> dequeue_min_below(const VectorTimestamp& bound);

    // Oldest entry labeled for `p`, without removal.
    std::optional<Value> peek_by_label(ProcessId p) const;

    // Removes and returns the oldest entry labeled for `p`. Calling with no
    // such entry is a protocol violation; the fast-path guard checks first.
    ReplicaEntry deq_by_label(ProcessId p);

    // Removes and returns the oldest unlabeled entry with ts below `bound`.
    std::optional<ReplicaEntry> deq_unlabeled_below(const VectorTimestamp& bound);

    // Removes the entry holding `value` if present; no-op when absent in
    // release builds, asserted in debug builds.
    void remove_value(const Value& value);

    std::size_t unlabeled_size() const;
    std::size_t unlabeled_size_below(const VectorTimestamp& bound) const;

    // Labels the x oldest unlabeled entries for `p`; with a bound, only
    // entries with ts below it count. Returns the labeled values in order.
    std::vector<Value> label_oldest(ProcessId p, std::size_t x,
                                    const std::optional<VectorTimestamp>& bound = std::nullopt);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<ReplicaEntry>& entries() const { return entries_; }

    // Ordered snapshot for convergence checks.
    nlohmann::json snapshot() const;

private:
    std::vector<ReplicaEntry> entries_;
};

}  // namespace asyncq
