#include "lec/persistent_seq.hpp"

#include <stdexcept>

namespace lec {

namespace {
uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}
}  // namespace

int PersistentSeq::make_node(SeqItem item) {
    Node n;
    n.item = item;
    n.prio = splitmix64(++counter_);
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
}

int PersistentSeq::clone_node(int n) {
    nodes_.push_back(nodes_[n]);
    return static_cast<int>(nodes_.size()) - 1;
}

int PersistentSeq::join(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    int out;
    if (nodes_[a].prio >= nodes_[b].prio) {
        const int sub = join(nodes_[a].r, b);
        out = clone_node(a);
        nodes_[out].r = sub;
    } else {
        const int sub = join(a, nodes_[b].l);
        out = clone_node(b);
        nodes_[out].l = sub;
    }
    nodes_[out].size = sz(nodes_[out].l) + sz(nodes_[out].r) + 1;
    return out;
}

void PersistentSeq::split(int n, int k, int& a, int& b) {
    if (n < 0) {
        a = b = -1;
        return;
    }
    if (k <= 0) {
        a = -1;
        b = n;
        return;
    }
    if (k >= nodes_[n].size) {
        a = n;
        b = -1;
        return;
    }
    // clone_node may reallocate the arena, so recursion results go through
    // locals, never through references into nodes_.
    const int c = clone_node(n);
    if (k <= sz(nodes_[n].l)) {
        int la, lb;
        split(nodes_[n].l, k, la, lb);
        a = la;
        nodes_[c].l = lb;
        nodes_[c].size = sz(nodes_[c].l) + sz(nodes_[c].r) + 1;
        b = c;
    } else {
        int ra, rb;
        split(nodes_[n].r, k - sz(nodes_[n].l) - 1, ra, rb);
        nodes_[c].r = ra;
        nodes_[c].size = sz(nodes_[c].l) + sz(nodes_[c].r) + 1;
        a = c;
        b = rb;
    }
}

void PersistentSeq::init(const std::vector<SeqItem>& items) {
    nodes_.clear();
    roots_.clear();
    counter_ = 0;
    int root = -1;
    for (const SeqItem& it : items) root = join(root, make_node(it));
    roots_.push_back(root);
}

int PersistentSeq::size(int version) const { return sz(roots_.at(version)); }

SeqItem PersistentSeq::at(int version, int pos) const {
    int n = roots_.at(version);
    if (pos < 0 || pos >= sz(n)) throw std::out_of_range("PersistentSeq::at");
    while (true) {
        const int ls = sz(nodes_[n].l);
        if (pos < ls) {
            n = nodes_[n].l;
        } else if (pos == ls) {
            return nodes_[n].item;
        } else {
            pos -= ls + 1;
            n = nodes_[n].r;
        }
    }
}

std::vector<SeqItem> PersistentSeq::read(int version) const {
    std::vector<SeqItem> out;
    out.reserve(static_cast<size_t>(size(version)));
    std::vector<int> stack;
    int n = roots_.at(version);
    while (n >= 0 || !stack.empty()) {
        while (n >= 0) {
            stack.push_back(n);
            n = nodes_[n].l;
        }
        n = stack.back();
        stack.pop_back();
        out.push_back(nodes_[n].item);
        n = nodes_[n].r;
    }
    return out;
}

int PersistentSeq::apply(int version, const std::vector<SpliceOp>& ops) {
    int root = roots_.at(version);
    for (const SpliceOp& op : ops) {
        int a, b, mid, rest;
        switch (op.kind) {
            case SpliceOp::Insert:
                split(root, op.pos, a, b);
                root = join(join(a, make_node(op.item)), b);
                break;
            case SpliceOp::Erase:
                split(root, op.pos, a, rest);
                split(rest, 1, mid, b);
                root = join(a, b);
                break;
            case SpliceOp::SetMeet: {
                split(root, op.pos, a, rest);
                split(rest, 1, mid, b);
                const int c = clone_node(mid);
                nodes_[c].item.meet = op.item.meet;
                root = join(join(a, c), b);
                break;
            }
        }
    }
    roots_.push_back(root);
    return static_cast<int>(roots_.size()) - 1;
}

}  // namespace lec
