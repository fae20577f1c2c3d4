#pragma once

#include <cstdint>
#include <vector>

namespace lec {

struct SeqItem {
    int id = -1;
    uint8_t meet = 0;  // meeting number of this element with its successor

    friend bool operator==(const SeqItem& a, const SeqItem& b) {
        return a.id == b.id && a.meet == b.meet;
    }
};

struct SpliceOp {
    enum Kind : uint8_t { Insert = 0, Erase = 1, SetMeet = 2 };
    uint8_t kind = Insert;
    int pos = 0;
    SeqItem item{};
};

// Partially persistent sequence over a path-copying treap. Every apply()
// produces one new readable version; all older versions stay intact. Tree
// priorities are drawn from a deterministic counter so identical op
// histories give identical structures.
class PersistentSeq {
public:
    // Creates version 0 with the given contents.
    void init(const std::vector<SeqItem>& items);

    int version_count() const { return static_cast<int>(roots_.size()); }
    int size(int version) const;
    SeqItem at(int version, int pos) const;          // O(log n)
    std::vector<SeqItem> read(int version) const;    // O(n)

    // Applies the ops in order against the evolving content and returns the
    // new version index. Positions are interpreted after prior ops, exactly
    // like sequential std::vector edits.
    int apply(int version, const std::vector<SpliceOp>& ops);

    size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        SeqItem item;
        int l = -1, r = -1;
        int size = 1;
        uint64_t prio = 0;
    };

    int make_node(SeqItem item);
    int clone_node(int n);
    int sz(int n) const { return n < 0 ? 0 : nodes_[n].size; }
    int join(int a, int b);
    void split(int n, int k, int& a, int& b);  // a = first k elements

    std::vector<Node> nodes_;
    std::vector<int> roots_;
    uint64_t counter_ = 0;
};

}  // namespace lec
