#include "reokern/io.hpp"

#include <algorithm>
#include <sstream>

#include "io_json.hpp"
#include "reokern/error.hpp"

namespace reokern {

using detail::json;

digraph instance_document::to_digraph() const {
	return digraph(g.vertex_count(), arcs.value_or(std::vector<digraph::arc>{}));
}

std::string_view modification_type(const local_modification &m) {
	struct visitor {
		std::string_view operator()(const edge_add &) const { return "EdgeAdd"; }
		std::string_view operator()(const edge_del &) const { return "EdgeDel"; }
		std::string_view operator()(const vertex_del &) const { return "VertexDel"; }
		std::string_view operator()(const vertex_add &) const { return "VertexAdd"; }
	};
	return std::visit(visitor{}, m);
}

namespace {

[[noreturn]] void field_error(const std::string &field, const std::string &what) {
	throw error(error_code::parse_error, "field '" + field + "': " + what);
}

const json *find(const json &j, const char *key) {
	auto it = j.find(key);
	return it == j.end() ? nullptr : &*it;
}

int as_int(const json &j, const std::string &field) {
	if (!j.is_number_integer())
		field_error(field, "expected an integer");
	return j.get<int>();
}

vertex as_vertex(const json &j, const std::string &field, std::size_t n) {
	if (!j.is_number_integer() || j.get<long long>() < 0)
		field_error(field, "expected a vertex index");
	const auto v = j.get<long long>();
	if (static_cast<unsigned long long>(v) >= n)
		field_error(field, "vertex " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")");
	return static_cast<vertex>(v);
}

const json &as_array(const json &j, const std::string &field) {
	if (!j.is_array())
		field_error(field, "expected an array");
	return j;
}

std::pair<vertex, vertex> as_pair(const json &j, const std::string &field, std::size_t n) {
	if (!j.is_array() || j.size() != 2)
		field_error(field, "expected a pair");
	return {as_vertex(j[0], field + "[0]", n), as_vertex(j[1], field + "[1]", n)};
}

std::vector<vertex> as_vertices(const json &j, const std::string &field, std::size_t n) {
	std::vector<vertex> out;
	const auto &a = as_array(j, field);
	for (std::size_t i = 0; i < a.size(); ++i)
		out.push_back(as_vertex(a[i], field + "[" + std::to_string(i) + "]", n));
	return out;
}

vertex_set as_vertex_set(const json &j, const std::string &field, std::size_t n) {
	auto v = as_vertices(j, field, n);
	return {v.begin(), v.end()};
}

json pairs_to_json(const std::vector<edge> &edges) {
	json a = json::array();
	for (const auto &e : edges)
		a.push_back({e.u, e.v});
	return a;
}

template <class C>
json list_to_json(const C &c) {
	json a = json::array();
	for (auto x : c)
		a.push_back(x);
	return a;
}

json modification_to_json(const local_modification &m) {
	json j;
	j["type"] = modification_type(m);
	std::visit(
		[&](const auto &mod) {
			using T = std::decay_t<decltype(mod)>;
			if constexpr (std::is_same_v<T, edge_add> || std::is_same_v<T, edge_del>) {
				j["u"] = mod.u;
				j["v"] = mod.v;
			} else if constexpr (std::is_same_v<T, vertex_del>) {
				j["v"] = mod.v;
			} else {
				j["neighbors"] = list_to_json(mod.neighbors);
			}
		},
		m);
	return j;
}

local_modification modification_from_json(const json &j, std::size_t n) {
	if (!j.is_object())
		field_error("modification", "expected an object");
	const json *type = find(j, "type");
	if (!type || !type->is_string())
		field_error("modification.type", "missing");
	const auto t = type->get<std::string>();
	const auto need = [&](const char *key) -> const json & {
		const json *f = find(j, key);
		if (!f)
			field_error(std::string("modification.") + key, "missing");
		return *f;
	};
	if (t == "EdgeAdd" || t == "EdgeDel") {
		const vertex u = as_vertex(need("u"), "modification.u", n);
		const vertex v = as_vertex(need("v"), "modification.v", n);
		return t == "EdgeAdd" ? local_modification{edge_add{u, v}} : edge_del{u, v};
	}
	if (t == "VertexDel")
		return vertex_del{as_vertex(need("v"), "modification.v", n)};
	if (t == "VertexAdd")
		return vertex_add{as_vertices(need("neighbors"), "modification.neighbors", n)};
	field_error("modification.type", "unknown type '" + t + "'");
}

}  // namespace

namespace detail {

json document_to_json(const instance_document &doc) {
	json j;
	j["format"] = "reokern-instance";
	j["version"] = doc.version;
	if (doc.problem)
		j["problem"] = to_string(*doc.problem);
	j["n"] = doc.g.vertex_count();
	j["edges"] = pairs_to_json(doc.g.edges());
	if (doc.g.has_labels())
		j["labels"] = doc.g.labels();
	if (doc.arcs) {
		json a = json::array();
		for (const auto &arc : *doc.arcs)
			a.push_back({arc.from, arc.to});
		j["arcs"] = a;
	}
	if (doc.k)
		j["k"] = *doc.k;
	if (doc.k_prime)
		j["k_prime"] = *doc.k_prime;
	if (doc.witness)
		j["witness"] = {{"vertices", list_to_json(doc.witness->vertices)},
		                {"edges", pairs_to_json(doc.witness->edges)}};
	if (doc.modification)
		j["modification"] = modification_to_json(*doc.modification);
	if (doc.set_cover) {
		json fam = json::array();
		for (const auto &s : doc.set_cover->family)
			fam.push_back(list_to_json(s));
		j["set_cover"] = {{"universe", doc.set_cover->universe}, {"family", fam}, {"k", doc.set_cover->k}};
	}
	if (doc.crown)
		j["crown"] = {{"crown", list_to_json(doc.crown->crown)},
		              {"head", list_to_json(doc.crown->head)},
		              {"rest", list_to_json(doc.crown->rest)},
		              {"matching", pairs_to_json(doc.crown->m.edges())}};
	return j;
}

instance_document document_from_json(const json &j) {
	if (!j.is_object())
		throw error(error_code::parse_error, "document must be an object");
	instance_document doc;
	if (const json *f = find(j, "format"); f && (!f->is_string() || f->get<std::string>() != "reokern-instance"))
		field_error("format", "expected \"reokern-instance\"");
	if (const json *f = find(j, "version")) {
		doc.version = as_int(*f, "version");
		if (doc.version != document_version)
			field_error("version", "unsupported version " + std::to_string(doc.version));
	}
	if (const json *f = find(j, "problem")) {
		if (!f->is_string())
			field_error("problem", "expected a string");
		auto p = parse_problem_kind(f->get<std::string>());
		if (!p)
			field_error("problem", "unknown problem '" + f->get<std::string>() + "'");
		doc.problem = p;
	}
	std::size_t n = 0;
	if (const json *f = find(j, "n")) {
		const int v = as_int(*f, "n");
		if (v < 0)
			field_error("n", "negative");
		n = static_cast<std::size_t>(v);
	}
	std::vector<edge> edges;
	if (const json *f = find(j, "edges")) {
		const auto &a = as_array(*f, "edges");
		for (std::size_t i = 0; i < a.size(); ++i) {
			const auto field = "edges[" + std::to_string(i) + "]";
			auto [u, v] = as_pair(a[i], field, n);
			if (u == v)
				field_error(field, "self-loop");
			edges.push_back(make_edge(u, v));
		}
		auto sorted = edges;
		std::sort(sorted.begin(), sorted.end());
		if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
			field_error("edges", "duplicate edge");
	}
	std::vector<std::string> labels;
	if (const json *f = find(j, "labels")) {
		const auto &a = as_array(*f, "labels");
		if (a.size() != n)
			field_error("labels", "expected " + std::to_string(n) + " labels");
		for (std::size_t i = 0; i < a.size(); ++i) {
			if (!a[i].is_string())
				field_error("labels[" + std::to_string(i) + "]", "expected a string");
			labels.push_back(a[i].get<std::string>());
		}
	}
	doc.g = graph(n, std::move(edges), std::move(labels));
	if (const json *f = find(j, "arcs")) {
		const auto &a = as_array(*f, "arcs");
		std::vector<digraph::arc> arcs;
		for (std::size_t i = 0; i < a.size(); ++i) {
			const auto field = "arcs[" + std::to_string(i) + "]";
			auto [u, v] = as_pair(a[i], field, n);
			if (u == v)
				field_error(field, "self-loop");
			arcs.push_back({u, v});
		}
		try {
			digraph check(n, arcs);
		} catch (const error &e) {
			field_error("arcs", e.what());
		}
		doc.arcs = std::move(arcs);
	}
	if (const json *f = find(j, "k"))
		doc.k = as_int(*f, "k");
	if (const json *f = find(j, "k_prime"))
		doc.k_prime = as_int(*f, "k_prime");
	if (const json *f = find(j, "set_cover")) {
		if (!f->is_object())
			field_error("set_cover", "expected an object");
		set_cover_instance sc;
		const json *u = find(*f, "universe");
		const json *fam = find(*f, "family");
		const json *k = find(*f, "k");
		if (!u || !fam || !k)
			field_error("set_cover", "needs universe, family and k");
		sc.universe = as_int(*u, "set_cover.universe");
		sc.k = as_int(*k, "set_cover.k");
		const auto &a = as_array(*fam, "set_cover.family");
		for (std::size_t i = 0; i < a.size(); ++i) {
			const auto field = "set_cover.family[" + std::to_string(i) + "]";
			std::vector<int> s;
			for (std::size_t e = 0; e < as_array(a[i], field).size(); ++e)
				s.push_back(as_int(a[i][e], field + "[" + std::to_string(e) + "]"));
			sc.family.push_back(std::move(s));
		}
		try {
			check_set_cover(sc);
		} catch (const error &e) {
			field_error("set_cover", e.what());
		}
		doc.set_cover = std::move(sc);
	}
	if (const json *f = find(j, "witness")) {
		if (!f->is_object())
			field_error("witness", "expected an object");
		// Set cover witnesses index the family.
		const std::size_t range = doc.problem == problem_kind::set_cover && doc.set_cover
		                              ? doc.set_cover->family.size()
		                              : n;
		solution w;
		if (const json *v = find(*f, "vertices"))
			w.vertices = as_vertices(*v, "witness.vertices", range);
		if (const json *e = find(*f, "edges")) {
			const auto &a = as_array(*e, "witness.edges");
			for (std::size_t i = 0; i < a.size(); ++i) {
				auto [u, v] = as_pair(a[i], "witness.edges[" + std::to_string(i) + "]", n);
				w.edges.push_back({u, v});
			}
		}
		doc.witness = std::move(w);
	}
	if (const json *f = find(j, "modification"))
		doc.modification = modification_from_json(*f, n);
	if (const json *f = find(j, "crown")) {
		if (!f->is_object())
			field_error("crown", "expected an object");
		crown_decomposition cd;
		if (const json *c = find(*f, "crown"))
			cd.crown = as_vertex_set(*c, "crown.crown", n);
		if (const json *h = find(*f, "head"))
			cd.head = as_vertex_set(*h, "crown.head", n);
		if (const json *r = find(*f, "rest"))
			cd.rest = as_vertex_set(*r, "crown.rest", n);
		if (const json *m = find(*f, "matching")) {
			const auto &a = as_array(*m, "crown.matching");
			for (std::size_t i = 0; i < a.size(); ++i) {
				const auto field = "crown.matching[" + std::to_string(i) + "]";
				auto [u, v] = as_pair(a[i], field, n);
				if (u == v || cd.m.is_matched(u) || cd.m.is_matched(v))
					field_error(field, "pairs must be disjoint");
				cd.m.add(make_edge(u, v));
			}
		}
		doc.crown = std::move(cd);
	}
	return doc;
}

}  // namespace detail

instance_document parse_json_instance(std::string_view text) {
	json j;
	try {
		j = json::parse(text.begin(), text.end());
	} catch (const json::parse_error &e) {
		const auto upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
		const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
		throw error(error_code::parse_error, "line " + std::to_string(line) + ": " + e.what());
	}
	return detail::document_from_json(j);
}

instance_document parse_dimacs(std::string_view text) {
	std::istringstream in{std::string(text)};
	std::string line;
	std::size_t lineno = 0;
	std::optional<std::size_t> n;
	std::size_t declared = 0;
	std::vector<edge> edges;
	const auto fail = [&](const std::string &what) {
		throw error(error_code::parse_error, "line " + std::to_string(lineno) + ": " + what);
	};
	while (std::getline(in, line)) {
		++lineno;
		std::istringstream ls(line);
		std::string tag;
		if (!(ls >> tag) || tag == "c")
			continue;
		if (tag == "p") {
			std::string kind;
			long long nn = -1, mm = -1;
			if (n)
				fail("second problem line");
			if (!(ls >> kind >> nn >> mm) || (kind != "edge" && kind != "col") || nn < 0 || mm < 0)
				fail("expected 'p edge <n> <m>'");
			n = static_cast<std::size_t>(nn);
			declared = static_cast<std::size_t>(mm);
		} else if (tag == "e") {
			if (!n)
				fail("edge before problem line");
			long long a = 0, b = 0;
			if (!(ls >> a >> b))
				fail("expected 'e <u> <v>'");
			if (a < 1 || b < 1 || static_cast<std::size_t>(a) > *n || static_cast<std::size_t>(b) > *n)
				fail("vertex out of range 1.." + std::to_string(*n));
			if (a == b)
				fail("self-loop");
			edges.push_back(make_edge(static_cast<vertex>(a - 1), static_cast<vertex>(b - 1)));
		} else {
			fail("unknown line type '" + tag + "'");
		}
		std::string extra;
		if (ls >> extra)
			fail("trailing token '" + extra + "'");
	}
	if (!n)
		throw error(error_code::parse_error, "missing 'p edge' line");
	if (edges.size() != declared)
		throw error(error_code::parse_error, "problem line declares " + std::to_string(declared) + " edges, found " +
		                                         std::to_string(edges.size()));
	auto sorted = edges;
	std::sort(sorted.begin(), sorted.end());
	if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
		throw error(error_code::parse_error, "duplicate edge");
	instance_document doc;
	doc.g = graph(*n, std::move(edges));
	return doc;
}

instance_document parse_instance(std::string_view text) {
	const auto first = text.find_first_not_of(" \t\r\n");
	if (first != std::string_view::npos && text[first] == '{')
		return parse_json_instance(text);
	return parse_dimacs(text);
}

std::string emit_instance(const instance_document &doc) { return detail::document_to_json(doc).dump(2) + "\n"; }

std::string emit_dimacs(const graph &g) {
	std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
	for (const auto &e : g.edges())
		out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
	return out;
}

}  // namespace reokern
