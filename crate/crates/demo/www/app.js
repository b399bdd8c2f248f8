const AXES = ["Re z1", "Im z1", "Re z2", "Im z2", "Re z3", "Im z3"];
const ROW = 7;
const CHARTS = [
  { code: 0, name: "base", color: "#4c78a8" },
  { code: 1, name: "cylinder", color: "#f58518" },
  { code: 2, name: "cap", color: "#54a24b" },
  { code: 3, name: "collar", color: "#e45756" },
  { code: 4, name: "disc", color: "#9467bd" },
];

const $ = (id) => document.getElementById(id);

let wasm;
try {
  wasm = await import("./pkg/hartogs_demo.js");
  await wasm.default();
} catch (e) {
  $("load-error").hidden = false;
  throw e;
}

for (const sel of [$("axis-x"), $("axis-y")]) {
  AXES.forEach((name, i) => sel.add(new Option(name, i)));
}
$("axis-x").value = "0";
$("axis-y").value = "2";

function drawCloud() {
  const shape = $("shape").value;
  const density = Number($("density").value);
  const t = Number($("t").value);
  $("t-wrap").hidden = shape !== "slice";
  $("t-out").value = t.toFixed(2);

  let rows;
  try {
    rows = shape === "slice" ? wasm.disc_slice(t, density) : wasm.figure_cloud(shape, density);
  } catch (e) {
    $("legend").innerHTML = `<span class="err">${e}</span>`;
    return;
  }

  const ax = 1 + Number($("axis-x").value);
  const ay = 1 + Number($("axis-y").value);
  const canvas = $("cloud");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);

  let xmin = Infinity, xmax = -Infinity, ymin = Infinity, ymax = -Infinity;
  for (let i = 0; i < rows.length; i += ROW) {
    xmin = Math.min(xmin, rows[i + ax]); xmax = Math.max(xmax, rows[i + ax]);
    ymin = Math.min(ymin, rows[i + ay]); ymax = Math.max(ymax, rows[i + ay]);
  }
  const padX = (xmax - xmin || 1) * 0.07, padY = (ymax - ymin || 1) * 0.07;
  xmin -= padX; xmax += padX; ymin -= padY; ymax += padY;
  const sx = (x) => ((x - xmin) / (xmax - xmin)) * canvas.width;
  const sy = (y) => canvas.height - ((y - ymin) / (ymax - ymin)) * canvas.height;

  const present = new Set();
  for (let i = 0; i < rows.length; i += ROW) {
    const chart = CHARTS[rows[i]];
    present.add(chart.code);
    ctx.fillStyle = chart.color + "b0";
    ctx.beginPath();
    ctx.arc(sx(rows[i + ax]), sy(rows[i + ay]), 2.1, 0, Math.PI * 2);
    ctx.fill();
  }

  ctx.fillStyle = "gray";
  ctx.font = "12px system-ui";
  ctx.fillText(AXES[ax - 1], canvas.width - 46, canvas.height - 8);
  ctx.fillText(AXES[ay - 1], 8, 14);

  $("legend").innerHTML = CHARTS.filter((c) => present.has(c.code))
    .map((c) => `<span><span class="dot" style="background:${c.color}"></span>${c.name}</span>`)
    .join("") + `<span>${rows.length / ROW} points</span>`;
}

function drawSweep(report) {
  const canvas = $("sweep");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const recs = report.records;
  const logs = recs.map((r) => (r.mismatch > 0 ? Math.log10(r.mismatch) : -18));
  const lo = Math.min(...logs, -17), hi = Math.max(...logs, 1);
  const sx = (t) => 40 + t * (canvas.width - 60);
  const sy = (v) => canvas.height - 24 - ((v - lo) / (hi - lo)) * (canvas.height - 44);

  ctx.strokeStyle = "gray";
  ctx.strokeRect(40, 20, canvas.width - 60, canvas.height - 44);
  ctx.fillStyle = "gray";
  ctx.font = "11px system-ui";
  ctx.fillText("log10 mismatch", 44, 14);
  ctx.fillText("t = 0", 40, canvas.height - 8);
  ctx.fillText("t = 1", canvas.width - 50, canvas.height - 8);

  if (report.t_star !== null) {
    ctx.strokeStyle = "#e45756";
    ctx.setLineDash([4, 3]);
    ctx.beginPath();
    ctx.moveTo(sx(report.t_star), 20);
    ctx.lineTo(sx(report.t_star), canvas.height - 24);
    ctx.stroke();
    ctx.setLineDash([]);
  }
  for (const [i, r] of recs.entries()) {
    ctx.fillStyle = r.flagged ? "#e45756" : "#4c78a8";
    ctx.beginPath();
    ctx.arc(sx(r.t), sy(logs[i]), 3.2, 0, Math.PI * 2);
    ctx.fill();
  }
}

$("element-kind").addEventListener("change", () => {
  $("element").hidden = $("element-kind").value !== "custom";
});

$("run-continuation").addEventListener("click", () => {
  const kind = $("element-kind").value;
  const spec = kind === "custom" ? $("element").value : kind;
  let report;
  try {
    report = JSON.parse(wasm.continuation_json(spec, 41, 512));
  } catch (e) {
    $("sweep-out").innerHTML = `<span class="err">${e}</span>`;
    return;
  }
  drawSweep(report);
  const origin = report.origin ? `${report.origin[0].toPrecision(6)} + ${report.origin[1].toPrecision(6)}i` : "—";
  $("sweep-out").textContent =
    `element        ${report.element}\n` +
    `flag onset t*  ${report.t_star === null ? "none (continues cleanly)" : report.t_star.toFixed(6)}\n` +
    `winding there  ${report.winding_at_flag ?? "—"}\n` +
    `value at 0     ${origin}`;
});

$("run-curve").addEventListener("click", () => {
  let r;
  try {
    r = JSON.parse(wasm.curve_min_json($("curve").value, 24, 96, 7));
  } catch (e) {
    $("curve-out").innerHTML = `<span class="err">${e}</span>`;
    return;
  }
  $("curve-out").textContent =
    `curve          ${r.curve}\n` +
    `search minimum ${r.minimum.toExponential(3)}   (grid check ${r.grid_minimum.toExponential(3)})\n` +
    `at             ${r.chart} chart, (${r.location[0].toFixed(4)}, ${r.location[1].toFixed(4)})\n` +
    `verdict        ${r.hits_disc ? "meets the smoothed disc" : "stays away from the smoothed disc"}`;
});

for (const id of ["shape", "axis-x", "axis-y", "t", "density"]) {
  $(id).addEventListener("input", drawCloud);
}
drawCloud();
$("run-continuation").click();
$("run-curve").click();
