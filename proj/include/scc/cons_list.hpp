#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace scc {

/// Immutable singly-linked list with structural sharing. Pushing a head is
/// O(1) and leaves every previously obtained list untouched, which is what
/// the environment threading relies on: stacks and component lists extend
/// without invalidating older snapshots.
///
/// Destruction is iterative; long chains (10^5+ nodes) must not unwind
/// through recursive shared_ptr release.
template <typename T>
class ConsList {
    struct Node {
        T value;
        std::size_t length;
        // mutable so release() can steal the tail while unlinking.
        mutable std::shared_ptr<const Node> tail;
    };

public:
    ConsList() = default;

    ConsList(const ConsList&) = default;
    ConsList(ConsList&&) noexcept = default;

    ConsList& operator=(const ConsList& other) {
        if (this != &other) {
            release();
            head_ = other.head_;
        }
        return *this;
    }

    ConsList& operator=(ConsList&& other) noexcept {
        if (this != &other) {
            release();
            head_ = std::move(other.head_);
        }
        return *this;
    }

    ~ConsList() { release(); }

    [[nodiscard]] bool empty() const { return head_ == nullptr; }
    [[nodiscard]] std::size_t size() const { return head_ ? head_->length : 0; }

    /// New list with v in front. O(1).
    [[nodiscard]] ConsList cons(T v) const {
        auto node = std::make_shared<Node>(Node{std::move(v), size() + 1, head_});
        return ConsList(std::move(node));
    }

    /// Front element. Pre: !empty().
    const T& head() const { return head_->value; }

    /// List without its front element. Pre: !empty().
    [[nodiscard]] ConsList tail() const { return ConsList(head_->tail); }

    /// Suffix after dropping k elements. Pre: k <= size().
    [[nodiscard]] ConsList drop(std::size_t k) const {
        auto p = head_;
        while (k-- > 0)
            p = p->tail;
        return ConsList(p);
    }

    class iterator {
    public:
        using value_type = T;
        explicit iterator(const Node* p) : p_(p) {}
        const T& operator*() const { return p_->value; }
        const T* operator->() const { return &p_->value; }
        iterator& operator++() {
            p_ = p_->tail.get();
            return *this;
        }
        bool operator==(const iterator& o) const = default;

    private:
        const Node* p_;
    };

    iterator begin() const { return iterator(head_.get()); }
    iterator end() const { return iterator(nullptr); }

    [[nodiscard]] std::vector<T> to_vector() const {
        std::vector<T> out;
        out.reserve(size());
        for (const T& v : *this)
            out.push_back(v);
        return out;
    }

    friend bool operator==(const ConsList& a, const ConsList& b) {
        if (a.head_ == b.head_)
            return true;
        if (a.size() != b.size())
            return false;
        auto pa = a.head_.get();
        auto pb = b.head_.get();
        while (pa != nullptr) {
            if (pa == pb)
                return true; // shared suffix
            if (!(pa->value == pb->value))
                return false;
            pa = pa->tail.get();
            pb = pb->tail.get();
        }
        return true;
    }

    /// True when other is a structural suffix of this list (same nodes or
    /// equal values after dropping size()-other.size() elements).
    [[nodiscard]] bool ends_with(const ConsList& other) const {
        if (other.size() > size())
            return false;
        return drop(size() - other.size()) == other;
    }

private:
    explicit ConsList(std::shared_ptr<const Node> h) : head_(std::move(h)) {}

    void release() noexcept {
        std::shared_ptr<const Node> p = std::move(head_);
        while (p && p.use_count() == 1) {
            std::shared_ptr<const Node> next = std::move(p->tail);
            p = std::move(next);
        }
    }

    std::shared_ptr<const Node> head_;
};

} // namespace scc
