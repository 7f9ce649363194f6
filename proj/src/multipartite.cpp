#include "distblock/multipartite.hpp"

#include <algorithm>
#include <sstream>

#include "distblock/errors.hpp"
#include "distblock/exact_linalg.hpp"

namespace distblock {

MultipartiteSpec::MultipartiteSpec(std::vector<long> p) : parts(std::move(p)) {
    if (parts.size() < 2)
        throw InvalidSpecError("multipartite composition needs at least 2 parts");
    for (long n : parts)
        if (n < 1) throw InvalidSpecError("part sizes must be positive");
}

MultipartiteSpec MultipartiteSpec::sorted() const {
    MultipartiteSpec s = *this;
    std::sort(s.parts.begin(), s.parts.end());
    return s;
}

std::string MultipartiteSpec::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    return os.str();
}

MultipartiteSpec MultipartiteSpec::parse(const std::string& text) {
    std::vector<long> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw InvalidSpecError("bad composition: '" + text + "'");
        }
    }
    return MultipartiteSpec(std::move(parts));
}

MultipartiteSpec t_n(long n) {
    if (n < 3) throw InvalidSpecError("T_n requires n >= 3");
    return MultipartiteSpec({1, 1, n - 2});
}

namespace graphs {

ExactMatrix build_multipartite(const MultipartiteSpec& spec) {
    const std::size_t m = spec.part_count();
    std::vector<std::vector<ExactMatrix>> grid(m, std::vector<ExactMatrix>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const auto ni = static_cast<std::size_t>(spec.parts[i]);
        for (std::size_t j = 0; j < m; ++j) {
            const auto nj = static_cast<std::size_t>(spec.parts[j]);
            grid[i][j] = i == j ? ExactMatrix::aI_bJ(ni, -2, 2)
                                : ExactMatrix::ones(ni, nj);
        }
    }
    return linalg::block_assemble(grid);
}

}  // namespace graphs

}  // namespace distblock
