#include "labelkit/io.hpp"

#include <sstream>
#include <stdexcept>

namespace labelkit {

std::string toGraph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("toGraph6: order too large");
    }
    // upper triangle, column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph fromGraph6(std::string_view s) {
    // tolerate optional header and surrounding whitespace
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string_view::npos) throw std::invalid_argument("fromGraph6: empty input");
    s = s.substr(b, e - b + 1);
    if (s.substr(0, 10) == ">>graph6<<") s = s.substr(10);
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("fromGraph6: truncated");
        int c = static_cast<unsigned char>(s[pos++]) - 63;
        if (c < 0 || c > 63) throw std::invalid_argument("fromGraph6: bad byte");
        return c;
    };
    int n;
    if (s[0] == '~') {
        ++pos;
        int a = next(), b2 = next(), c = next();
        n = (a << 12) | (b2 << 6) | c;
    } else {
        n = next();
    }
    if (n < 1) throw std::invalid_argument("fromGraph6: order must be >= 1");
    EdgeList edges;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) edges.push_back({i, j});
            --nbits;
        }
    }
    return Graph(n, std::move(edges));
}

std::string toEdgeListText(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph fromEdgeListText(std::string_view text) {
    std::istringstream is{std::string(text)};
    int p, q;
    if (!(is >> p >> q)) throw std::invalid_argument("edge list: missing 'p q' header");
    EdgeList edges;
    for (int i = 0; i < q; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::invalid_argument("edge list: truncated after " + std::to_string(i) + " edges");
        edges.push_back({u, v});
    }
    return Graph(p, std::move(edges));
}

std::string toLabelingText(const Labeling& phi) {
    std::ostringstream os;
    for (size_t u = 0; u < phi.size(); ++u) os << u << ':' << phi[u] << '\n';
    return os.str();
}

Labeling fromLabelingText(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    std::vector<std::pair<int, int>> entries;
    int maxNode = -1;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("labeling line missing ':': " + line);
        int u = std::stoi(line.substr(0, colon));
        int lab = std::stoi(line.substr(colon + 1));
        if (u < 0 || lab < 0) throw std::invalid_argument("labeling: negative entry");
        entries.push_back({u, lab});
        maxNode = std::max(maxNode, u);
    }
    Labeling phi(maxNode + 1, -1);
    for (auto [u, lab] : entries) {
        if (phi[u] != -1) throw std::invalid_argument("labeling: node repeated");
        phi[u] = lab;
    }
    for (size_t u = 0; u < phi.size(); ++u)
        if (phi[u] == -1) throw std::invalid_argument("labeling: node " + std::to_string(u) + " missing");
    return phi;
}

}  // namespace labelkit
