#pragma once

#include <stdexcept>
#include <string>

namespace pcd {

// Every error raised by the library carries a short machine-readable kind,
// which the CLI echoes in its structured stderr output.
class error : public std::runtime_error {
public:
	error(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
	const std::string& kind() const noexcept { return kind_; }

private:
	std::string kind_;
};

#define PCD_DEFINE_ERROR(name, tag)                                      \
	class name : public error {                                          \
	public:                                                              \
		explicit name(const std::string& what) : error(tag, what) {}     \
	};

PCD_DEFINE_ERROR(invalid_graph, "InvalidGraph")
PCD_DEFINE_ERROR(not_a_tree, "NotATree")
PCD_DEFINE_ERROR(vertex_not_on_walk, "VertexNotOnWalk")
PCD_DEFINE_ERROR(not_skeleton, "NotSkeleton")
PCD_DEFINE_ERROR(not_a_brrb_path, "NotABrrbPath")
PCD_DEFINE_ERROR(not_in_class_g, "NotInClassG")
PCD_DEFINE_ERROR(too_large, "TooLarge")
PCD_DEFINE_ERROR(unverified_certificate, "UnverifiedCertificate")
PCD_DEFINE_ERROR(precondition_violated, "PreconditionViolated")
PCD_DEFINE_ERROR(edge_bound_violated, "EdgeBoundViolated")
PCD_DEFINE_ERROR(merge_exhausted, "MergeExhausted")
PCD_DEFINE_ERROR(dichotomy_violation, "DichotomyViolation")
PCD_DEFINE_ERROR(parse_error, "ParseError")
PCD_DEFINE_ERROR(duplicate_edge, "DuplicateEdge")
PCD_DEFINE_ERROR(self_loop, "SelfLoop")

#undef PCD_DEFINE_ERROR

} // namespace pcd
