"""Local measurement channels and the Werner-state distillation protocols.

Alice holds subsystem A of a shared bipartite state, measures it, and
announces the outcome; Bob applies an incoherent unitary correction.
The figure of merit is the average relative entropy of coherence of
Bob's corrected conditional states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .coherence import c_re
from .linalg import DEFAULT_TOL
from .states import DensityMatrix, werner

# Single-qubit gates used for outcome corrections.
IDENTITY_2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PHASE_MINUS_I = np.array([[1.0, 0.0], [0.0, -1.0j]], dtype=complex)
PHASE_PLUS_I = np.array([[1.0, 0.0], [0.0, 1.0j]], dtype=complex)

# Erasing measurement on A: each operator maps everything onto |0> with
# the input amplitudes folded into relative phases.
ERASE_K1 = np.array([[1.0j, 1.0], [0.0, 0.0]], dtype=complex) / math.sqrt(2.0)
ERASE_K2 = np.array([[-1.0j, 1.0], [0.0, 0.0]], dtype=complex) / math.sqrt(2.0)

# Measurement outcomes below this probability are dropped.
PROB_FLOOR = 1e-14


def is_incoherent_kraus(k, tol: float = DEFAULT_TOL) -> bool:
    """True when every column has at most one entry above tol, so the
    operator maps incoherent states to (unnormalized) incoherent states."""
    m = np.abs(linalg.as_matrix(k)) > tol
    return bool((m.sum(axis=0) <= 1).all())


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """A finite Kraus decomposition {K_l} with sum K+ K = I."""

    operators: tuple[np.ndarray, ...]
    labels: tuple[str, ...] = ()
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        ops = tuple(linalg.as_matrix(k).copy() for k in self.operators)
        if not ops:
            raise ValueError("channel needs at least one Kraus operator")
        d = ops[0].shape[0]
        if any(k.shape != (d, d) for k in ops):
            raise ValueError("Kraus operators must be square and share one dimension")
        labels = tuple(self.labels) or tuple(str(i + 1) for i in range(len(ops)))
        if len(labels) != len(ops):
            raise ValueError("one label per Kraus operator")
        total = -linalg.identity(d)
        for k in ops:
            total += k.conj().T @ k
        defect = float(np.abs(total).max())
        if defect > self.tol:
            raise ValueError(f"Kraus completeness violated by {defect}")
        for k in ops:
            k.setflags(write=False)
        object.__setattr__(self, "operators", ops)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.operators[0].shape[0]

    @property
    def is_incoherent(self) -> bool:
        return all(is_incoherent_kraus(k, self.tol) for k in self.operators)


@dataclass(frozen=True, eq=False)
class Ensemble:
    """A labeled mixture {(probability, state)} over a common dimension."""

    items: tuple[tuple[float, DensityMatrix], ...]
    labels: tuple[str, ...] = ()
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not self.items:
            raise ValueError("ensemble needs at least one branch")
        labels = tuple(self.labels) or tuple(str(i + 1) for i in range(len(self.items)))
        if len(labels) != len(self.items):
            raise ValueError("one label per branch")
        dims = self.items[0][1].dims
        total = 0.0
        for q, state in self.items:
            if q < -self.tol:
                raise ValueError(f"negative branch probability {q}")
            if state.dims != dims:
                raise ValueError("ensemble states must share dims")
            total += q
        if abs(total - 1.0) > self.tol:
            raise ValueError(f"branch probabilities sum to {total}, expected 1")
        object.__setattr__(self, "labels", labels)

    @property
    def probabilities(self) -> tuple[float, ...]:
        return tuple(q for q, _ in self.items)

    @property
    def states(self) -> tuple[DensityMatrix, ...]:
        return tuple(s for _, s in self.items)


@dataclass(frozen=True, eq=False)
class OutcomeRecord:
    """One protocol branch: outcome label, its probability, and the
    correction gate Bob applied."""

    label: str
    probability: float
    correction: np.ndarray


@dataclass(frozen=True, eq=False)
class ProtocolResult:
    """Corrected outcome ensemble, its distillation rate, and the
    per-outcome transcript."""

    ensemble: Ensemble
    rate: float
    transcript: tuple[OutcomeRecord, ...]


def measure_local_A(rho: DensityMatrix, channel: KrausChannel) -> Ensemble:
    """Measure subsystem A with {K_l x I_B}; return Bob's conditional
    ensemble {(q_l, tr_A[(K_l x I) rho (K_l x I)+] / q_l)}.

    Outcomes with probability below PROB_FLOOR are dropped.
    """
    if len(rho.dims) != 2:
        raise ValueError(f"needs a bipartite state, dims are {rho.dims}")
    da, db = rho.dims
    if channel.dim != da:
        raise ValueError(f"channel acts on dimension {channel.dim}, A has {da}")
    d = da * db
    items = []
    labels = []
    for k, label in zip(channel.operators, channel.labels):
        # K x I_B in the A-major convention: K entries on every B-diagonal
        lifted = np.zeros((d, d), dtype=complex)
        for j in range(db):
            lifted[j::db, j::db] = k
        m = lifted @ rho.mat @ lifted.conj().T
        q = float(m.trace().real)
        if q < PROB_FLOOR:
            continue
        # trace out A: sum the B-blocks along the A diagonal
        bob = m[0:db, 0:db].copy()
        for a in range(1, da):
            bob += m[a * db : (a + 1) * db, a * db : (a + 1) * db]
        items.append((q, DensityMatrix(bob / q, (db,), rho.tol)))
        labels.append(label)
    if not items:
        raise ValueError("all outcomes fell below the probability floor")
    return Ensemble(tuple(items), tuple(labels), rho.tol)


def apply_correction(ensemble: Ensemble, gates) -> Ensemble:
    """Conjugate each branch by its correction gate.

    Every gate must be unitary and incoherent (at most one nonzero entry
    per column); anything else would smuggle coherence into Bob's lab.
    """
    gates = tuple(linalg.as_matrix(g) for g in gates)
    if len(gates) != len(ensemble.items):
        raise ValueError("one correction gate per branch")
    items = []
    for (q, state), u in zip(ensemble.items, gates):
        defect = float(np.abs(u.conj().T @ u - linalg.identity(u.shape[0])).max())
        if defect > ensemble.tol:
            raise ValueError(f"correction gate is not unitary (defect {defect})")
        if not is_incoherent_kraus(u, ensemble.tol):
            raise ValueError("correction gate is not incoherent")
        items.append((q, DensityMatrix(u @ state.mat @ u.conj().T, state.dims, state.tol)))
    return Ensemble(tuple(items), ensemble.labels, ensemble.tol)


def ensemble_rate(ensemble: Ensemble, tol: float = DEFAULT_TOL) -> float:
    """Average coherence sum_l q_l c_re(rho_l) of an ensemble."""
    return sum(q * c_re(state, tol) for q, state in ensemble.items)


def _run_werner_protocol(p: float, channel: KrausChannel, corrections: dict) -> ProtocolResult:
    measured = measure_local_A(werner(p), channel)
    gates = tuple(corrections[label] for label in measured.labels)
    corrected = apply_correction(measured, gates)
    transcript = tuple(
        OutcomeRecord(label, q, gate)
        for label, (q, _), gate in zip(corrected.labels, corrected.items, gates)
    )
    return ProtocolResult(corrected, ensemble_rate(corrected), transcript)


def lqicc_werner_protocol(p: float) -> ProtocolResult:
    """Alice measures X on her half of werner(p); Bob fixes outcome -1
    with a Z gate.  Both corrected branches equal p|+><+| + (1-p) I/2."""
    plus = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
    minus = np.array([[0.5, -0.5], [-0.5, 0.5]], dtype=complex)
    channel = KrausChannel((plus, minus), ("+1", "-1"))
    return _run_werner_protocol(p, channel, {"+1": IDENTITY_2, "-1": PAULI_Z})


def licc_erasing_protocol(p: float) -> ProtocolResult:
    """Alice applies the incoherent erasing measurement {ERASE_K1,
    ERASE_K2} to her half of werner(p); Bob applies X then a phase gate
    (-i or +i on |1>) per the announced outcome.  Both corrected
    branches again equal p|+><+| + (1-p) I/2."""
    channel = KrausChannel((ERASE_K1, ERASE_K2), ("1", "2"))
    corrections = {"1": PHASE_MINUS_I @ PAULI_X, "2": PHASE_PLUS_I @ PAULI_X}
    return _run_werner_protocol(p, channel, corrections)
