#pragma once

// Flat conformal models: the embeddings g -> so(p+1, q+1) and the structure
// induced on the orbit of a null line.

#include "rank1/lie.hpp"
#include "rank1/report.hpp"

namespace rank1 {

class BadBasepoint : public Error
{
  public:
	using Error::Error;
};

struct ConformalEmbedding
{
	AlgebraSpec spec;
	QuadFormQ ambient_form;
	std::vector<MatrixQ> images;
	bool homomorphism = false;
	bool injective = false;
	bool skew = false;
};

/// Standard (realified) representation for so/su/sp, J0 for f4.
ConformalEmbedding build_embedding(LieAlgebraQ const &g);

/// Expected ambient signature: (k,1) for so(1,k), (2,2k), (4,4k), (10,16).
Signature expected_ambient_signature(AlgebraSpec const &spec);

struct BlockSignature
{
	std::string block;    ///< "g_-2a", "g_-a", "m"
	std::size_t image_dim = 0;
	Signature signature;  ///< of the normalized induced form on the block
};

struct IsotropyReport
{
	Vector null_vector;
	Scalar eigenvalue;      ///< of the embedded H on the null vector
	Subspace stabilizer;    ///< g_x
	Subspace m_cap_stabilizer;
	int sign = 1;           ///< +-1, makes the g_-a block positive
	QuadFormQ induced_form; ///< on g/g_x, in the coordinates of a complement
	std::vector<BlockSignature> blocks;
	std::size_t kernel_dim = 0;
	std::size_t orbit_dim = 0;
	Report checks;
};

/// Highest-weight null line of the embedded H, its stabilizer and the induced
/// form on g/g_x. Throws BadBasepoint if no H-eigen null direction passes the
/// checks.
IsotropyReport null_isotropy(LieAlgebraQ const &g, ConformalEmbedding const &e, RootDecomposition const &rd);

/// Expected orbit dimension: k-1, 2k, 4k+2; f4 is reported without a target.
std::optional<std::size_t> expected_orbit_dim(AlgebraSpec const &spec);

Report verify_embedding_signature(LieAlgebraQ const &g, ConformalEmbedding const &e);
Report verify_null_isotropy(LieAlgebraQ const &g, IsotropyReport const &iso);
Report verify_orbit_dims(LieAlgebraQ const &g, IsotropyReport const &iso);

} // namespace rank1
