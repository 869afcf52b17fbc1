#include "freeprob/partition.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

namespace freeprob {

SetPartition SetPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
    if (n < 0) throw argument_error("SetPartition: negative ground set size");
    for (auto& b : blocks) {
        if (b.empty()) throw argument_error("SetPartition: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int count = 0;
    for (const auto& b : blocks) {
        for (int x : b) {
            if (x < 1 || x > n) throw argument_error("SetPartition: element outside {1..n}");
            if (seen[static_cast<std::size_t>(x)])
                throw argument_error("SetPartition: duplicate element " + std::to_string(x));
            seen[static_cast<std::size_t>(x)] = 1;
            ++count;
        }
    }
    if (count != n) throw argument_error("SetPartition: blocks do not cover {1..n}");
    return SetPartition{n, std::move(blocks)};
}

int SetPartition::block_of(int x) const {
    for (int i = 0; i < block_count(); ++i)
        if (std::binary_search(blocks[static_cast<std::size_t>(i)].begin(),
                               blocks[static_cast<std::size_t>(i)].end(), x))
            return i;
    throw argument_error("SetPartition: element not present");
}

bool is_noncrossing(const SetPartition& p) {
    // Direct quadruple scan over the block-id array.
    std::vector<int> id(static_cast<std::size_t>(p.n) + 1, -1);
    for (int b = 0; b < p.block_count(); ++b)
        for (int x : p.blocks[static_cast<std::size_t>(b)]) id[static_cast<std::size_t>(x)] = b;
    for (int i = 1; i <= p.n; ++i)
        for (int k = i + 2; k <= p.n; ++k) {
            if (id[static_cast<std::size_t>(i)] != id[static_cast<std::size_t>(k)]) continue;
            for (int j = i + 1; j < k; ++j) {
                if (id[static_cast<std::size_t>(j)] == id[static_cast<std::size_t>(i)]) continue;
                for (int l = k + 1; l <= p.n; ++l)
                    if (id[static_cast<std::size_t>(l)] == id[static_cast<std::size_t>(j)]) return false;
            }
        }
    return true;
}

int restricted_crossings(const SetPartition& p) {
    struct Arc {
        int lo, hi, block;
    };
    std::vector<Arc> arcs;
    for (int b = 0; b < p.block_count(); ++b) {
        const auto& blk = p.blocks[static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i + 1 < blk.size(); ++i)
            arcs.push_back({blk[i], blk[i + 1], b});
    }
    int rc = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            if (arcs[i].block == arcs[j].block) continue;
            const Arc& a = arcs[i].lo < arcs[j].lo ? arcs[i] : arcs[j];
            const Arc& b = arcs[i].lo < arcs[j].lo ? arcs[j] : arcs[i];
            if (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ++rc;
        }
    return rc;
}

std::string to_text(const SetPartition& p) {
    if (p.blocks.empty()) return "{}";
    std::string s;
    for (const auto& b : p.blocks) {
        s += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(b[i]);
        }
        s += '}';
    }
    return s;
}

SetPartition partition_from_text(std::string_view text) {
    std::vector<std::vector<int>> blocks;
    std::size_t i = 0;
    int n = 0;
    while (i < text.size()) {
        if (text[i] != '{') throw argument_error("partition text: expected '{'");
        ++i;
        std::vector<int> block;
        while (i < text.size() && text[i] != '}') {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw argument_error("partition text: expected digit");
            block.push_back(std::stoi(std::string(text.substr(i, j - i))));
            n = std::max(n, block.back());
            i = j;
            if (i < text.size() && text[i] == ',') ++i;
        }
        if (i == text.size()) throw argument_error("partition text: missing '}'");
        ++i;
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    return SetPartition::from_blocks(n, std::move(blocks));
}

nlohmann::json partition_to_json(const SetPartition& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& b : p.blocks) j.push_back(b);
    return j;
}

SetPartition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw argument_error("partition json: expected array of arrays");
    std::vector<std::vector<int>> blocks;
    int n = 0;
    for (const auto& jb : j) {
        if (!jb.is_array()) throw argument_error("partition json: expected array of arrays");
        std::vector<int> block;
        for (const auto& je : jb) {
            block.push_back(je.get<int>());
            n = std::max(n, block.back());
        }
        blocks.push_back(std::move(block));
    }
    return SetPartition::from_blocks(n, std::move(blocks));
}

} // namespace freeprob
