#include "qptf/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace qptf {

namespace {

void append_double(std::string& out, double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

double parse_double(std::string_view token, const std::string& path) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw io_error(path + ": malformed numeric field '" + std::string(token) + "'");
    return v;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error(path + ": cannot open for reading");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            lines.push_back(line);
    }
    return lines;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw io_error(path + ": cannot open for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out)
        throw io_error(path + ": write failed");
}

} // namespace

std::string format_double(double v) {
    std::string s;
    append_double(s, v);
    return s;
}

void write_tfmap_csv(const TFMap& map, const std::string& path) {
    std::string body;
    body.reserve(map.values.size() * 24 + map.cols() * 24 + 64);

    body += "# ";
    body += kind_name(map.kind);
    body += ',';
    if (map.params) {
        append_double(body, map.params->a);
        body += ',';
        append_double(body, map.params->b);
        body += ',';
        append_double(body, map.params->c);
        body += ',';
        append_double(body, map.params->d);
        body += ',';
        append_double(body, map.params->e);
    } else {
        body += ",,,,";
    }
    body += ',';
    body += std::to_string(map.src_n);
    body += ',';
    append_double(body, map.src_dt);
    body += '\n';

    for (std::size_t c = 0; c < map.cols(); ++c) {
        if (c)
            body += ',';
        append_double(body, map.freq_axis[c]);
    }
    body += '\n';

    for (std::size_t r = 0; r < map.rows(); ++r) {
        append_double(body, map.outer_axis[r]);
        for (std::size_t c = 0; c < map.cols(); ++c) {
            const cd& v = map.at(r, c);
            body += ',';
            append_double(body, v.real());
            body += ',';
            append_double(body, v.imag());
        }
        body += '\n';
    }
    write_file(path, body);
}

TFMap read_tfmap_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.size() < 3)
        throw io_error(path + ": not a map file (need header, axis, and rows)");
    if (lines[0].rfind("# ", 0) != 0)
        throw io_error(path + ": missing '# ' header line");

    const auto head = split_fields(std::string_view(lines[0]).substr(2));
    if (head.size() != 8)
        throw io_error(path + ": header needs kind, five parameters, N, dt");

    TFMap map;
    const auto kind = kind_from_name(std::string(head[0]));
    if (!kind)
        throw io_error(path + ": unknown map kind '" + std::string(head[0]) + "'");
    map.kind = *kind;

    const bool have_params = !head[1].empty();
    if (have_params != kind_requires_params(map.kind))
        throw io_error(path + ": parameter fields do not match the map kind");
    if (have_params)
        map.params.emplace(parse_double(head[1], path), parse_double(head[2], path),
                           parse_double(head[3], path), parse_double(head[4], path),
                           parse_double(head[5], path));

    map.src_n = static_cast<std::size_t>(parse_double(head[6], path));
    map.src_dt = parse_double(head[7], path);

    for (const auto tok : split_fields(lines[1]))
        map.freq_axis.push_back(parse_double(tok, path));
    if (map.freq_axis.empty())
        throw io_error(path + ": empty frequency axis");

    const std::size_t m = map.freq_axis.size();
    map.values.reserve((lines.size() - 2) * m);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto fields = split_fields(lines[i]);
        if (fields.size() != 1 + 2 * m)
            throw io_error(path + ": row " + std::to_string(i + 1) +
                           " has the wrong field count");
        map.outer_axis.push_back(parse_double(fields[0], path));
        for (std::size_t c = 0; c < m; ++c)
            map.values.emplace_back(parse_double(fields[1 + 2 * c], path),
                                    parse_double(fields[2 + 2 * c], path));
    }
    return map;
}

void write_signal_csv(const Signal& f, const std::string& path) {
    std::string body = "# signal,";
    append_double(body, f.t0);
    body += ',';
    append_double(body, f.dt);
    body += ',';
    body += std::to_string(f.samples.size());
    body += '\n';
    for (std::size_t n = 0; n < f.samples.size(); ++n) {
        append_double(body, f.time_at(n));
        body += ',';
        append_double(body, f.samples[n].real());
        body += ',';
        append_double(body, f.samples[n].imag());
        body += '\n';
    }
    write_file(path, body);
}

Signal read_signal_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty() || lines[0].rfind("# signal,", 0) != 0)
        throw io_error(path + ": missing '# signal' header");

    const auto head = split_fields(std::string_view(lines[0]).substr(9));
    if (head.size() != 3)
        throw io_error(path + ": signal header needs t0, dt, N");

    Signal f;
    f.t0 = parse_double(head[0], path);
    f.dt = parse_double(head[1], path);
    const auto n = static_cast<std::size_t>(parse_double(head[2], path));
    if (lines.size() != n + 1)
        throw io_error(path + ": expected " + std::to_string(n) + " sample rows");

    f.samples.reserve(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_fields(lines[i]);
        if (fields.size() != 3)
            throw io_error(path + ": sample rows need t, re, im");
        f.samples.emplace_back(parse_double(fields[1], path),
                               parse_double(fields[2], path));
    }
    return f;
}

void write_heatmap(const TFMap& map, const std::string& path, int contour_levels) {
    if (contour_levels < 0 || contour_levels == 1)
        throw std::invalid_argument("contour_levels must be 0 or at least 2");
    if (map.rows() == 0 || map.cols() == 0)
        throw std::invalid_argument("cannot render an empty map");

    double max_mag = 0.0;
    for (const cd& v : map.values)
        max_mag = std::max(max_mag, std::abs(v));

    std::string body = "P5\n" + std::to_string(map.cols()) + ' ' +
                       std::to_string(map.rows()) + "\n255\n";
    body.reserve(body.size() + map.values.size());

    for (const cd& v : map.values) {
        unsigned char pixel = 0;
        if (max_mag > 0.0) {
            const double unit = std::abs(v) / max_mag;
            if (contour_levels == 0) {
                pixel = static_cast<unsigned char>(std::lround(255.0 * unit));
            } else {
                const int k = contour_levels;
                const int level = std::min(k - 1, static_cast<int>(unit * k));
                pixel = static_cast<unsigned char>(
                    std::lround(255.0 * level / (k - 1)));
            }
        }
        body.push_back(static_cast<char>(pixel));
    }
    write_file(path, body);
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::string body =
        "kind,snr_db,seed,detected,slope,intercept,nu0_hat,xi0_hat,"
        "peak_ratio,n_ridges,fit_rmse\n";
    for (const SweepRow& row : rows) {
        const DetectionReport& rep = row.report;
        body += kind_name(rep.kind);
        body += ',';
        append_double(body, row.snr_db);
        body += ',';
        body += std::to_string(row.seed);
        body += ',';
        body += rep.detected ? '1' : '0';
        body += ',';
        append_double(body, rep.line.slope);
        body += ',';
        append_double(body, rep.line.intercept);
        body += ',';
        if (rep.nu0_hat)
            append_double(body, *rep.nu0_hat);
        body += ',';
        if (rep.xi0_hat)
            append_double(body, *rep.xi0_hat);
        body += ',';
        append_double(body, rep.peak_ratio);
        body += ',';
        body += std::to_string(rep.n_ridges);
        body += ',';
        append_double(body, rep.fit_rmse);
        body += '\n';
    }
    write_file(path, body);
}

void write_residual_csv(const std::vector<ResidualReport>& reports,
                        const std::string& path) {
    std::string body = "property,variant,rel_error,n,dt,m\n";
    for (const ResidualReport& rep : reports) {
        body += property_name(rep.property);
        body += ',';
        const std::string variant = rep.best_variant();
        body += variant.empty() ? "-" : variant;
        body += ',';
        append_double(body, rep.rel_error);
        body += ',';
        body += std::to_string(rep.grid_meta.n);
        body += ',';
        append_double(body, rep.grid_meta.dt);
        body += ',';
        body += std::to_string(rep.grid_meta.m);
        body += '\n';
    }
    write_file(path, body);
}

} // namespace qptf
