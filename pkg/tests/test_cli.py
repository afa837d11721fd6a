import json
import math
import subprocess
import sys

import numpy as np
import pytest
from numpy.testing import assert_allclose

from oracles import BELL_AMPLITUDES, SQRT_HALF


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "bellclone", *args],
        capture_output=True,
        text=True,
    )


def write_state(tmp_path, amps, num_qubits=2, name="state.txt"):
    lines = [f"qubits {num_qubits}"]
    lines += [f"{float(a.real)!r} {float(a.imag)!r}" for a in np.asarray(amps, dtype=complex)]
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n")
    return str(path)


class TestDemo:
    def test_seed7_bell3_json_object(self):
        proc = run_cli("demo", "--seed", "7", "--bell", "3", "--format", "json")
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["hidden_index"] == 3
        assert report["identified_index"] == 3
        assert report["outcome_bits"] == "11"
        assert report["fidelity_original"] >= 1 - 1e-9
        assert report["fidelity_clone"] >= 1 - 1e-9
        assert report["ucm_reference"] == pytest.approx(5 / 6)
        assert report["seed"] == 7

    def test_seed7_bell0_identifies_00(self):
        proc = run_cli("demo", "--seed", "7", "--bell", "0", "--format", "json")
        report = json.loads(proc.stdout)
        assert report["identified_index"] == 0
        assert report["outcome_bits"] == "00"

    @pytest.mark.parametrize("index", [0, 1, 2, 3])
    def test_every_hidden_index_is_identified(self, index):
        proc = run_cli("demo", "--bell", str(index), "--format", "json")
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["identified_index"] == index

    def test_hidden_index_drawn_from_seed(self):
        for seed in range(8):
            proc = run_cli("demo", "--seed", str(seed), "--format", "json")
            assert proc.returncode == 0
            report = json.loads(proc.stdout)
            expected = int(np.random.default_rng(seed).integers(0, 4))
            assert report["hidden_index"] == expected
            assert report["identified_index"] == expected

    def test_plain_format_is_key_equals_value(self):
        proc = run_cli("demo", "--seed", "7", "--bell", "3")
        assert proc.returncode == 0
        lines = proc.stdout.splitlines()
        keys = [line.split(" = ")[0] for line in lines]
        assert keys == [
            "hidden_index",
            "identified_index",
            "outcome_bits",
            "fidelity_original",
            "fidelity_clone",
            "ucm_reference",
            "seed",
        ]
        assert "outcome_bits = 11" in lines

    def test_byte_identical_across_runs(self):
        first = run_cli("demo", "--seed", "5", "--format", "json")
        second = run_cli("demo", "--seed", "5", "--format", "json")
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode

    def test_bell_flag_rejects_out_of_range(self):
        proc = run_cli("demo", "--bell", "5")
        assert proc.returncode == 2


class TestClone:
    def test_bell_file_clones_at_fidelity_one(self, tmp_path):
        path = write_state(tmp_path, BELL_AMPLITUDES[1])
        proc = run_cli("clone", "--state", path, "--format", "json")
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["input_label"] == "1"
        assert report["fidelity_original"] == pytest.approx(1.0, abs=1e-12)
        assert report["fidelity_clone"] == pytest.approx(1.0, abs=1e-12)
        joint = np.array([complex(re, im) for re, im in report["joint_state"]])
        assert_allclose(joint, np.kron(BELL_AMPLITUDES[1], BELL_AMPLITUDES[1]), atol=1e-12)

    def test_superposition_file_reports_half(self, tmp_path):
        sup = (BELL_AMPLITUDES[0] + BELL_AMPLITUDES[1]) / math.sqrt(2)
        path = write_state(tmp_path, sup)
        proc = run_cli("clone", "--state", path, "--format", "json")
        report = json.loads(proc.stdout)
        assert report["input_label"] == "superposition"
        assert report["fidelity_original"] == pytest.approx(0.5, abs=1e-12)
        assert report["fidelity_clone"] == pytest.approx(0.5, abs=1e-12)

    def test_plain_format_lists_report_fields(self, tmp_path):
        path = write_state(tmp_path, BELL_AMPLITUDES[2])
        proc = run_cli("clone", "--state", path)
        assert proc.returncode == 0
        assert proc.stdout.startswith("input_label = 2\n")
        assert "ucm_reference = 0.8333333333333334" in proc.stdout

    def test_malformed_file_exits_2_with_line_number(self, tmp_path):
        path = tmp_path / "broken.txt"
        path.write_text("qubits 2\n1 0\n0 0\n0 0\n")
        proc = run_cli("clone", "--state", str(path))
        assert proc.returncode == 2
        assert proc.stdout == ""
        assert "broken.txt:1" in proc.stderr

    def test_wrong_qubit_count_exits_2(self, tmp_path):
        path = write_state(tmp_path, [SQRT_HALF, SQRT_HALF], num_qubits=1)
        proc = run_cli("clone", "--state", path)
        assert proc.returncode == 2
        assert "2-qubit" in proc.stderr

    def test_bad_norm_exits_2(self, tmp_path):
        path = write_state(tmp_path, [0.9, 0.0, 0.0, 0.0])
        proc = run_cli("clone", "--state", path)
        assert proc.returncode == 2
        assert "norm" in proc.stderr

    def test_missing_file_exits_2(self, tmp_path):
        proc = run_cli("clone", "--state", str(tmp_path / "absent.txt"))
        assert proc.returncode == 2

    def test_state_flag_is_required(self):
        proc = run_cli("clone")
        assert proc.returncode == 2


class TestVerify:
    def test_exits_zero_with_all_checks_listed(self):
        proc = run_cli("verify")
        assert proc.returncode == 0
        lines = proc.stdout.splitlines()
        check_lines = [line for line in lines if line.startswith(("PASS", "FAIL"))]
        assert len(check_lines) == 19
        assert all(line.startswith("PASS") for line in check_lines)
        assert "tolerance=" in check_lines[0]
        assert "max_deviation=" in check_lines[0]
        assert lines[-1] == "19/19 checks passed"

    def test_byte_identical_across_runs(self):
        first = run_cli("verify", "--seed", "2")
        second = run_cli("verify", "--seed", "2")
        assert first.stdout == second.stdout


class TestMatrix:
    @staticmethod
    def parse(stdout):
        rows = []
        for line in stdout.splitlines():
            values = [float(v) for v in line.split()]
            rows.append([complex(values[k], values[k + 1]) for k in range(0, len(values), 2)])
        return np.array(rows)

    def test_encode_columns_are_bell_states(self):
        proc = run_cli("matrix", "encode")
        assert proc.returncode == 0
        unitary = self.parse(proc.stdout)
        assert unitary.shape == (4, 4)
        for index in range(4):
            assert_allclose(unitary[:, index], BELL_AMPLITUDES[index], atol=1e-12)

    def test_decode_times_encode_is_identity(self):
        # two dumps multiplied externally, matching how a reader would check
        encode = self.parse(run_cli("matrix", "encode").stdout)
        decode = self.parse(run_cli("matrix", "decode").stdout)
        assert_allclose(decode @ encode, np.eye(4), atol=1e-12)

    def test_tgp_dump_satisfies_the_subspace_constraints(self):
        unitary = self.parse(run_cli("matrix", "tgp").stdout)
        assert unitary.shape == (16, 16)
        assert_allclose(unitary.conj().T @ unitary, np.eye(16), atol=1e-10)
        ancilla = np.zeros(4)
        ancilla[0] = 1.0
        for index in range(4):
            label = np.zeros(4)
            label[index] = 1.0
            out = unitary @ np.kron(BELL_AMPLITUDES[index], ancilla)
            assert_allclose(out, np.kron(BELL_AMPLITUDES[index], label), atol=1e-12)

    def test_clone_dump_doubles_bell_states(self):
        unitary = self.parse(run_cli("matrix", "clone").stdout)
        ancilla = np.zeros(4)
        ancilla[0] = 1.0
        for index in range(4):
            out = unitary @ np.kron(BELL_AMPLITUDES[index], ancilla)
            assert_allclose(out, np.kron(BELL_AMPLITUDES[index], BELL_AMPLITUDES[index]), atol=1e-12)

    def test_entries_have_17_significant_digits(self):
        line = run_cli("matrix", "encode").stdout.splitlines()[0]
        assert "0.70710678118654746" in line

    def test_unknown_name_exits_2(self):
        proc = run_cli("matrix", "swap")
        assert proc.returncode == 2


def test_no_subcommand_is_a_usage_error():
    proc = run_cli()
    assert proc.returncode == 2
