import numpy as np
import scipy.sparse as sparse
from magspec.exceptions import NonHermitianAssembly, ShapeMismatch
from magspec.geometry.fields import VectorPotential, ScalarPotential, GaugeFunction
from magspec.initializer import get_convention, get_logger, is_debug_mode
from magspec.assembly.character import Character
from magspec.utils.io import dump_matrix

# kinetic prefactor of each normalization
CONVENTIONS = {"half": 0.5, "double": 1.0}


class AssembledOperator:
    """
    Discretized magnetic Schrodinger operator.

    The matrix is the symmetrized form c M^{-1/2} K M^{-1/2} + V of the
    generalized problem K u = lambda M u, with K the magnetic Dirichlet form
    and M the diagonal node measure. Eigenvalues of the matrix are those
    of the operator, eigenvectors differ by the factor M^{1/2}.

    Args:
        matrix (scipy.sparse.csr_matrix): Hermitian N x N matrix
        weights (np.ndarray): node measure sqrt|g| * prod h
        convention (str): "half" or "double"
        grid (GridDiscretization): the grid the operator lives on
        metadata (dict): alpha, V and the character
    """

    def __init__(self, matrix, weights, convention, grid, metadata=None):
        self.matrix = matrix.tocsr()
        self.weights = np.asarray(weights, dtype=float)
        self.convention = convention
        self.grid = grid
        self.metadata = {} if metadata is None else dict(metadata)

    @property
    def size(self):
        return self.matrix.shape[0]

    @property
    def shape(self):
        return self.matrix.shape

    def hermitian_defect(self):
        difference = self.matrix - self.matrix.conj().T
        return float(np.max(np.abs(difference.data))) if difference.nnz else 0.0

    def to_dense(self):
        return self.matrix.toarray()

    def matvec(self, u):
        return self.matrix @ u

    def rayleigh_quotient(self, u):
        """<u, H u> / <u, u> of a vector in the symmetrized basis."""
        u = np.asarray(u, dtype=complex).ravel()
        return float(np.real(np.vdot(u, self.matrix @ u)) / np.real(np.vdot(u, u)))

    def to_function(self, u):
        """Nodal values of the section represented by a symmetrized vector."""
        return (np.asarray(u).ravel() / np.sqrt(self.weights)).reshape(self.grid.shape)

    def from_function(self, values):
        return np.asarray(values).ravel() * np.sqrt(self.weights)

    def dump(self, path):
        dump_matrix(self.matrix, path,
                    comment="magspec {} convention={}".format(
                        self.grid.geometry.kind, self.convention))

    def __repr__(self):
        return "AssembledOperator(N={}, convention={}, {})".format(
            self.size, self.convention, self.grid)


def _link_matrix(grid, axis, phases, wrap_phase):
    """
    Covariant forward differences (e^{i theta} u_t - u_s) / h on every link
    along an axis, as a (links x N) matrix.
    """
    source, target, wraps = grid.forward_links(axis)
    theta = phases[axis].ravel()[source] + np.where(wraps, wrap_phase, 0.0)
    h = grid.spacings[axis]
    rows = np.arange(len(source))
    data = np.concatenate([np.full(len(source), -1.0 / h, dtype=complex),
                           np.exp(1j * theta) / h])
    return sparse.csr_matrix(
        (data, (np.concatenate([rows, rows]), np.concatenate([source, target]))),
        shape=(len(source), grid.size)), source


def _node_difference_matrix(grid, axis, phases, wrap_phase):
    """
    Covariant forward differences at every node (N x N). On Dirichlet axes
    the last node differences against the zero ghost value.
    """
    link, source = _link_matrix(grid, axis, phases, wrap_phase)
    h = grid.spacings[axis]
    embed = sparse.csr_matrix(
        (np.ones(len(source)), (source, np.arange(len(source)))),
        shape=(grid.size, len(source)))
    difference = embed @ link
    if not grid.is_periodic(axis):
        last = np.take(np.arange(grid.size).reshape(grid.shape),
                       grid.shape[axis] - 1, axis=axis).ravel()
        difference = difference + sparse.csr_matrix(
            (np.full(len(last), -1.0 / h), (last, last)),
            shape=(grid.size, grid.size))
    return difference


def _link_midpoints(grid, axis):
    points = grid.coordinates()
    points[axis] = points[axis] + 0.5 * grid.spacings[axis]
    return points


def _boundary_faces(grid, axis):
    """Faces of the first and last node of a Dirichlet axis, with node ids."""
    index = np.arange(grid.size).reshape(grid.shape)
    points = grid.coordinates()
    lo, hi = grid.bounds[axis]
    faces = []
    for position, face in ((0, lo), (grid.shape[axis] - 1, hi)):
        nodes = np.take(index, position, axis=axis).ravel()
        face_points = np.take(points, position, axis=axis + 1).reshape(
            grid.dimension, -1).copy()
        face_points[axis] = face
        faces.append((nodes, face_points))
    return faces


def _is_diagonal_metric(grid):
    g_inv = grid.metric_inverse()
    d = grid.dimension
    off = [np.max(np.abs(g_inv[j, k])) for j in range(d) for k in range(d) if j != k]
    return not off or max(off) == 0.0


def _dirichlet_form(grid, phases, wrap_phases):
    """Magnetic Dirichlet form sum_jk (D_j u)^* w g^{jk} (D_k u)."""
    N = grid.size
    d = grid.dimension
    cell = grid.cell_volume
    form = sparse.csr_matrix((N, N), dtype=complex)

    if _is_diagonal_metric(grid):
        # metric weights averaged onto half-shifted links
        for axis in range(d):
            link, source = _link_matrix(grid, axis, phases, wrap_phases[axis])
            midpoints = _link_midpoints(grid, axis)
            weight = (grid.metric_inverse_at(midpoints)[axis, axis]
                      * grid.volume_density_at(midpoints)).ravel()[source] * cell
            form = form + link.conj().T @ sparse.diags(weight) @ link
            if not grid.is_periodic(axis):
                # half link to the boundary face, where u vanishes
                h = grid.spacings[axis]
                for nodes, face_points in _boundary_faces(grid, axis):
                    weight = (grid.metric_inverse_at(face_points)[axis, axis]
                              * grid.volume_density_at(face_points)) * cell
                    form = form + sparse.csr_matrix(
                        (2.0 * weight / h ** 2, (nodes, nodes)), shape=(N, N))
        return form

    # full node-based form, positive semidefinite for any metric
    g_inv = grid.metric_inverse()
    density = grid.volume_density()
    differences = [_node_difference_matrix(grid, axis, phases, wrap_phases[axis])
                   for axis in range(d)]
    for j in range(d):
        for k in range(d):
            weight = (g_inv[j, k] * density).ravel() * cell
            if not np.any(weight):
                continue
            form = form + differences[j].conj().T @ sparse.diags(weight) @ differences[k]
    return form


def assemble(grid, alpha=None, V=None, character=None, convention=None):
    """
    Assemble the discretized operator 1/2 d_alpha^* d_alpha + V on a grid.

    The magnetic form is the symmetric divergence form with covariant
    forward differences on the links; the phase of a link is the line
    integral of alpha along it. A character multiplies the couplings of the
    wrap-around links by e^{i theta_k}; Dirichlet axes drop the couplings
    leaving the chart.

    Args:
        grid (GridDiscretization): the grid
        alpha (VectorPotential, optional): magnetic potential, default 0
        V (ScalarPotential, optional): electric potential, default 0
        character (Character, optional): Bloch-Floquet twist
        convention (str, optional): "half" or "double", defaults to the
            process convention

    Returns:
        AssembledOperator
    """
    alpha = VectorPotential.zeros(grid) if alpha is None else alpha
    V = ScalarPotential.zeros(grid) if V is None else V
    character = Character.trivial(grid) if character is None else character
    convention = get_convention() if convention is None else convention
    if convention not in CONVENTIONS:
        raise ValueError("unknown convention {!r}".format(convention))
    alpha.check_grid(grid)
    V.check_grid(grid)
    if not isinstance(character, Character):
        raise ShapeMismatch("character must be a Character")

    phases = alpha.phases(grid)
    wrap_phases = character.wrap_phases(grid)
    form = _dirichlet_form(grid, phases, wrap_phases)

    weights = grid.weights()
    scale = sparse.diags(1.0 / np.sqrt(weights))
    matrix = CONVENTIONS[convention] * (scale @ form @ scale) \
        + sparse.diags(V.values.ravel().astype(complex))
    matrix = matrix.tocsr()

    operator = AssembledOperator(matrix, weights, convention, grid,
                                 {"alpha": alpha, "V": V, "character": character})
    defect = operator.hermitian_defect()
    scale_max = max(1.0, float(np.max(np.abs(matrix.data)))) if matrix.nnz else 1.0
    if defect > 1e-12 * scale_max:
        raise NonHermitianAssembly(
            "||M - M^H||_max = {:.3e} after assembly".format(defect))
    # exact symmetrization, removes rounding in the last digit
    operator.matrix = (0.5 * (matrix + matrix.conj().T)).tocsr()
    if is_debug_mode():
        assert operator.weights.min() > 0, "node measure must be positive"
    get_logger().debug("assembled {} with N={} nnz={}".format(
        grid.geometry.kind, operator.size, operator.matrix.nnz))
    return operator


def gauge_shift(grid, alpha, f):
    """
    The gauge transformed potential alpha + df.

    Nodal components receive the centred difference of f, link phases the
    exact link difference, so assemble(alpha + df) is the conjugate of
    assemble(alpha) by diag(e^{if}).
    """
    if not isinstance(f, GaugeFunction):
        f = GaugeFunction(f)
    f.check_grid(grid)
    alpha.check_grid(grid)
    return VectorPotential(alpha.components + f.centered_gradient(grid),
                           alpha.phases(grid) + f.link_differences(grid))
