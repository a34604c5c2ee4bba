// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "ascoli/cantor.hpp"
#include "ascoli/errors.hpp"

namespace ascoli {

/// A 0/1-tree given by a membership predicate, decidable up to a depth
/// budget. Predicates must be prefix-closed on the queried fragment; the
/// explicit-set factory validates that, predicate trees promise it.
class BinTree {
public:
    BinTree(std::function<bool(const BitString&)> member, std::size_t depth_budget)
        : member_(std::move(member)), depth_budget_(depth_budget) {}

    static BinTree full(std::size_t depth_budget) {
        return BinTree([](const BitString&) { return true; }, depth_budget);
    }

    static BinTree from_set(std::set<BitString> nodes, std::size_t depth_budget) {
        if (nodes.empty()) throw std::invalid_argument("BinTree: empty node set");
        for (const BitString& s : nodes) {
            validate_bits(s);
            if (s.size() > depth_budget)
                throw std::invalid_argument("BinTree: node '" + s + "' exceeds depth budget");
            if (!s.empty() && nodes.find(s.substr(0, s.size() - 1)) == nodes.end())
                throw std::invalid_argument("BinTree: not prefix-closed at '" + s + "'");
        }
        auto shared = std::make_shared<std::set<BitString>>(std::move(nodes));
        return BinTree([shared](const BitString& s) { return shared->count(s) > 0; }, depth_budget);
    }

    bool member(const BitString& s) const {
        if (s.size() > depth_budget_)
            throw DepthBudgetExceeded("BinTree: query at depth " + std::to_string(s.size()) +
                                      " exceeds budget " + std::to_string(depth_budget_));
        return member_(s);
    }

    std::size_t depth_budget() const { return depth_budget_; }

private:
    std::function<bool(const BitString&)> member_;
    std::size_t depth_budget_;
};

/// Tree file format: a header line "depth_budget=D", then one member per
/// line ("e" stands for the root, otherwise a 0/1 string). The set must be
/// prefix-closed and contain the root.
inline BinTree load_tree(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("tree file: empty");
    const std::string key = "depth_budget=";
    if (line.rfind(key, 0) != 0) throw std::invalid_argument("tree file: missing depth_budget header");
    std::size_t budget = 0;
    try {
        budget = std::stoul(line.substr(key.size()));
    } catch (const std::exception&) {
        throw std::invalid_argument("tree file: bad depth_budget value");
    }
    std::set<BitString> nodes;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line == "e") {
            nodes.insert(BitString{});
            continue;
        }
        validate_bits(line);
        nodes.insert(line);
    }
    return BinTree::from_set(std::move(nodes), budget);
}

inline BinTree load_tree_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("tree file: cannot open " + path.string());
    return load_tree(in);
}

/// Bounded form of the node-liveness question "does this node have
/// infinitely many successors": true iff some extension of the given length
/// stays in the tree. Exact for the queried depth; prefix-closure makes the
/// pruned search equivalent to enumerating all extensions.
inline bool node_alive(const BinTree& T, const BitString& node, std::size_t depth) {
    if (node.size() + depth > T.depth_budget())
        throw DepthBudgetExceeded("node_alive: lookahead past depth budget at '" + node + "'");
    if (!T.member(node)) return false;
    if (depth == 0) return true;
    BitString child = node;
    child.push_back('0');
    if (node_alive(T, child, depth - 1)) return true;
    child.back() = '1';
    return node_alive(T, child, depth - 1);
}

/// Leftmost branch whose nodes survive the liveness lookahead: at each step
/// take child 0 if it is alive at the given depth, else child 1, else fail.
inline BitString leftmost_path(const BinTree& T, std::size_t length, std::size_t depth) {
    if (length + depth > T.depth_budget())
        throw DepthBudgetExceeded("leftmost_path: length + lookahead past depth budget");
    BitString cur;
    for (std::size_t step = 0; step < length; ++step) {
        BitString child = cur;
        child.push_back('0');
        if (node_alive(T, child, depth)) {
            cur = std::move(child);
            continue;
        }
        child.back() = '1';
        if (node_alive(T, child, depth)) {
            cur = std::move(child);
            continue;
        }
        throw DeadEnd("leftmost_path: both children dead at lookahead " + std::to_string(depth) +
                          " below '" + cur + "'",
                      cur);
    }
    return cur;
}

}  // namespace ascoli
