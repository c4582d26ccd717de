#include <qproj/text_format.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace qproj
{
    namespace
    {
        struct Line
        {
            int number;
            vector<string_view> words;
        };

        auto split_lines(string_view text) -> vector<Line>
        {
            vector<Line> lines;
            int number = 0;
            while (! text.empty()) {
                auto end = text.find('\n');
                auto raw = text.substr(0, end);
                text = end == string_view::npos ? string_view{} : text.substr(end + 1);
                ++number;

                if (auto hash = raw.find('#') ; hash != string_view::npos)
                    raw = raw.substr(0, hash);
                Line line{number, {}};
                std::size_t i = 0;
                while (i < raw.size()) {
                    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
                        ++i;
                    auto start = i;
                    while (i < raw.size() && ! std::isspace(static_cast<unsigned char>(raw[i])))
                        ++i;
                    if (i > start)
                        line.words.push_back(raw.substr(start, i - start));
                }
                if (! line.words.empty())
                    lines.push_back(std::move(line));
            }
            return lines;
        }

        auto to_int(const Line & line, string_view word) -> int
        {
            int value = 0;
            auto [end, error] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (error != std::errc{} || end != word.data() + word.size())
                throw ParseError(line.number, "expected an integer, got '" + string(word) + "'");
            return value;
        }

        auto indices(const Line & line, int n, std::size_t first) -> vector<int>
        {
            vector<int> result;
            for (auto i = first ; i < line.words.size() ; ++i) {
                int x = to_int(line, line.words[i]);
                if (x < 0 || x >= n)
                    throw ParseError(line.number, "element " + std::to_string(x) + " outside [0, "
                            + std::to_string(n) + ")");
                result.push_back(x);
            }
            return result;
        }

        auto body_keyword(Kind kind) -> string_view
        {
            switch (kind) {
                case Kind::Poset:
                case Kind::Lattice: return "le";
                case Kind::Permutation: return "perm";
                case Kind::GraphSimple:
                case Kind::GraphLoops: return "edge";
                case Kind::DigraphSimple:
                case Kind::DigraphLoops: return "arc";
                case Kind::Hypergraph: return "hedge";
                case Kind::Geometry: return "line";
            }
            return "";
        }

        auto join(string_view head, const vector<int> & values) -> string
        {
            string out(head);
            for (int v : values)
                out += " " + std::to_string(v);
            return out;
        }
    }

    auto parse_structure(string_view text) -> Structure
    {
        auto lines = split_lines(text);
        if (lines.empty())
            throw ParseError(1, "empty structure file");

        auto & header = lines[0];
        if (header.words.size() != 2 || header.words[0] != "kind")
            throw ParseError(header.number, "expected 'kind <name>'");
        auto kind = parse_kind_name(header.words[1]);
        if (! kind)
            throw ParseError(header.number, "unknown kind '" + string(header.words[1]) + "'");

        if (lines.size() < 2 || lines[1].words.size() != 2 || lines[1].words[0] != "n")
            throw ParseError(lines.size() < 2 ? header.number + 1 : lines[1].number, "expected 'n <count>'");
        int n = to_int(lines[1], lines[1].words[1]);
        if (n < 1 || n > max_elements)
            throw ParseError(lines[1].number, "n must lie in [1, 64]");

        auto keyword = body_keyword(*kind);
        vector<std::pair<int, int>> pairs;
        vector<vector<int>> sets;
        std::optional<vector<int>> sequence;

        for (std::size_t i = 2 ; i < lines.size() ; ++i) {
            auto & line = lines[i];
            if (line.words[0] != keyword)
                throw ParseError(line.number, "expected '" + string(keyword) + "' lines for kind "
                        + string(kind_name(*kind)));
            auto elements = indices(line, n, 1);

            if (*kind == Kind::Permutation) {
                if (sequence)
                    throw ParseError(line.number, "more than one perm line");
                auto sorted = elements;
                std::sort(sorted.begin(), sorted.end());
                if (int(elements.size()) != n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                    throw ParseError(line.number, "perm must list each of the n elements once");
                sequence = elements;
            }
            else if (is_set_family_kind(*kind)) {
                auto sorted = elements;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                    throw ParseError(line.number, "repeated element in " + string(keyword));
                sets.push_back(std::move(sorted));
            }
            else {
                if (elements.size() != 2)
                    throw ParseError(line.number, string(keyword) + " takes two elements");
                pairs.emplace_back(elements[0], elements[1]);
            }
        }

        if (*kind == Kind::Permutation) {
            if (! sequence)
                throw ParseError(lines.back().number, "missing perm line");
            return Structure::permutation(*sequence);
        }
        if (is_set_family_kind(*kind))
            return Structure::set_family(*kind, n, sets);
        if (is_order_kind(*kind))
            return Structure::order(*kind, n, pairs);
        return Structure::from_pairs(*kind, n, pairs);
    }

    auto format_structure(const Structure & s) -> string
    {
        std::ostringstream out;
        out << "kind " << kind_name(s.kind()) << '\n' << "n " << s.size() << '\n';
        auto keyword = body_keyword(s.kind());
        int n = s.size();

        switch (s.kind()) {
            case Kind::Permutation: {
                for (int a = 0 ; a < n ; ++a)
                    for (int b = 0 ; b < n ; ++b)
                        if (s.related(a, b, 0) != (a <= b))
                            throw std::invalid_argument("format_structure: first order is not index order");
                out << join(keyword, permutation_sequence(s)) << '\n';
                break;
            }
            case Kind::Hypergraph:
            case Kind::Geometry:
                for (auto e : s.sets())
                    out << join(keyword, e.elements()) << '\n';
                break;
            default:
                for (int a = 0 ; a < n ; ++a)
                    for (int b = 0 ; b < n ; ++b) {
                        if (! s.related(a, b))
                            continue;
                        if (is_order_kind(s.kind()) && a == b)
                            continue;
                        if (is_symmetric_kind(s.kind()) && b < a)
                            continue;
                        out << keyword << ' ' << a << ' ' << b << '\n';
                    }
                break;
        }
        return out.str();
    }

    auto parse_mapping(string_view text, int image_size) -> Mapping
    {
        auto lines = split_lines(text);
        if (lines.size() != 1 || lines[0].words[0] != "map")
            throw ParseError(lines.empty() ? 1 : lines[0].number, "expected a single 'map a0 a1 ...' line");
        return Mapping(image_size, indices(lines[0], image_size, 1));
    }

    auto format_mapping(const Mapping & m) -> string
    {
        return join("map", m.values()) + "\n";
    }

    auto read_file(const std::filesystem::path & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot read " + path.string());
        std::ostringstream contents;
        contents << in.rdbuf();
        return contents.str();
    }

    auto format_witness(const WitnessTriple & w) -> string
    {
        return "# target\n" + format_structure(w.target) + "\n# f\n" + format_mapping(w.f) + "\n# j\n"
            + format_mapping(w.j);
    }

    auto format_oracle_report(const OracleReport & report) -> string
    {
        std::ostringstream out;
        out << "verdict " << (report.qp ? "QP" : "NOT_QP") << '\n';
        out << "targets_examined " << report.targets_examined << '\n';
        out << "pairs_examined " << report.pairs_examined << '\n';
        if (report.witness)
            out << '\n' << format_witness(*report.witness);
        return out.str();
    }
}
