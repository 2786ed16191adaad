import init, { stateGeometry, circuitFrames, renderSvg } from "./pkg/venus_wasm.js";

const $ = (id) => document.getElementById(id);

const H = (q) => ({ name: "h", targets: [q] });
const X = (q) => ({ name: "x", targets: [q] });
const CZ = { name: "cz", targets: [0, 1] };
const DIFFUSER = [H(0), H(1), X(0), X(1), CZ, X(0), X(1), H(0), H(1)];
const PRESETS = {
  grover: { qubits: 2, gates: [H(0), H(1), CZ, ...DIFFUSER] },
  grover2: { qubits: 2, gates: [H(0), H(1), CZ, ...DIFFUSER, CZ, ...DIFFUSER] },
  bell: { qubits: 2, gates: [H(0), { name: "cnot", targets: [0, 1] }] },
};
const GATES = ["h", "x", "y", "z", "s", "t", "rx", "ry", "rz", "phase", "cnot", "cz", "swap"];
const PARAMETRIC = new Set(["rx", "ry", "rz", "phase"]);

let swapped = false;
let frames = [];

function order(qubits) {
  return qubits === 2 && swapped ? [1, 0] : null;
}

function showDiagnostics(el, diagnostics) {
  el.replaceChildren(
    ...diagnostics.map((d) => {
      const div = document.createElement("div");
      div.className = `diag ${d.severity}`;
      const where = d.location.pointer ?? `${d.location.line}:${d.location.column}`;
      div.textContent = `${d.severity} at ${where || "/"}: ${d.message}`;
      return div;
    }),
  );
}

function fmt(xs) {
  return xs.map((x) => x.toFixed(4)).join(", ");
}

function stats(el, r) {
  let text = `probabilities [${fmt(r.probabilities)}]`;
  if (r.concurrence !== null && r.concurrence !== undefined) {
    text += `\nconcurrence ${r.concurrence.toFixed(4)}`;
  }
  el.textContent = text;
  el.style.whiteSpace = "pre";
}

function buildAmplitudeTable() {
  const n = Number($("qubits").value);
  const dim = 1 << n;
  const rows = [];
  for (let i = 0; i < dim; i++) {
    const label = i.toString(2).padStart(n, "0");
    const re = i === 0 ? 1 : 0;
    rows.push(`<tr><td>|${label}&rang;</td>
      <td><input data-i="${i}" data-part="re" type="number" step="0.05" value="${re}"></td>
      <td>+ i <input data-i="${i}" data-part="im" type="number" step="0.05" value="0"></td></tr>`);
  }
  $("amps").innerHTML = rows.join("");
  $("amps").querySelectorAll("input").forEach((el) => el.addEventListener("input", drawState));
}

function drawState() {
  const n = Number($("qubits").value);
  const state = Array.from({ length: 1 << n }, () => [0, 0]);
  $("amps").querySelectorAll("input").forEach((el) => {
    state[Number(el.dataset.i)][el.dataset.part === "re" ? 0 : 1] = Number(el.value) || 0;
  });
  const request = { state, renormalize: $("renormalize").checked };
  const o = order(n);
  if (o) request.order = o;
  const r = JSON.parse(stateGeometry(JSON.stringify(request)));
  showDiagnostics($("state-diag"), r.diagnostics);
  if (!r.diagram) {
    $("state-svg").replaceChildren();
    $("state-stats").textContent = "";
    return;
  }
  $("state-svg").innerHTML = renderSvg(JSON.stringify(r.diagram));
  stats($("state-stats"), r);
}

function runCircuit(jumpToEnd) {
  let circuit;
  try {
    circuit = JSON.parse($("circuit").value);
  } catch (e) {
    showDiagnostics($("circuit-diag"), [{ severity: "error", location: { pointer: "" }, message: String(e) }]);
    return;
  }
  const request = { circuit };
  const o = order(circuit.qubits);
  if (o) request.order = o;
  const r = JSON.parse(circuitFrames(JSON.stringify(request)));
  showDiagnostics($("circuit-diag"), r.diagnostics);
  frames = r.frames ?? [];
  const slider = $("step");
  const previous = Number(slider.value);
  slider.max = Math.max(frames.length - 1, 0);
  slider.value = jumpToEnd ? slider.max : Math.min(previous, slider.max);
  showFrame();
}

function showFrame() {
  const k = Number($("step").value);
  const f = frames[k];
  if (!f) {
    $("frame-svg").replaceChildren();
    $("frame-stats").textContent = "";
    $("step-label").textContent = "";
    return;
  }
  const gate = f.gate ? `${f.gate.name} ${JSON.stringify(f.gate.targets)}` : "initial state";
  $("step-label").textContent = `frame ${k} / ${frames.length - 1}: ${gate}`;
  $("frame-svg").innerHTML = renderSvg(JSON.stringify(f.diagram));
  stats($("frame-stats"), f);
}

function appendGate() {
  let circuit;
  try {
    circuit = JSON.parse($("circuit").value);
  } catch {
    return runCircuit(false);
  }
  const name = $("gate-name").value;
  const gate = { name, targets: $("gate-targets").value.split(",").map((t) => Number(t.trim())) };
  if (PARAMETRIC.has(name)) {
    const raw = $("gate-param").value.trim();
    gate.params = [Number.isFinite(Number(raw)) && raw !== "" ? Number(raw) : raw];
  }
  circuit.gates = [...(circuit.gates ?? []), gate];
  $("circuit").value = JSON.stringify(circuit);
  runCircuit(true);
}

function setPreset(key) {
  $("circuit").value = JSON.stringify(PRESETS[key]);
  $("step").value = 0;
  runCircuit(false);
}

await init();

$("gate-name").innerHTML = GATES.map((g) => `<option>${g}</option>`).join("");
$("qubits").addEventListener("change", () => {
  buildAmplitudeTable();
  drawState();
});
$("renormalize").addEventListener("change", drawState);
$("draw").addEventListener("click", drawState);
$("order-toggle").addEventListener("click", () => {
  swapped = !swapped;
  $("order-label").textContent = swapped ? "q1, q0" : "q0, q1";
  drawState();
  runCircuit(false);
});
$("preset-grover").addEventListener("click", () => setPreset("grover"));
$("preset-grover2").addEventListener("click", () => setPreset("grover2"));
$("preset-bell").addEventListener("click", () => setPreset("bell"));
$("run").addEventListener("click", () => runCircuit(false));
$("step").addEventListener("input", showFrame);
$("prev").addEventListener("click", () => {
  $("step").value = Math.max(0, Number($("step").value) - 1);
  showFrame();
});
$("next").addEventListener("click", () => {
  $("step").value = Math.min(frames.length - 1, Number($("step").value) + 1);
  showFrame();
});
$("append").addEventListener("click", appendGate);

buildAmplitudeTable();
drawState();
setPreset("grover");
