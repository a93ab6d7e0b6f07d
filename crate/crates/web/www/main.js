import init, { explore, certify, mode_grid } from "./pkg/dompow_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function show(id, text, isError = false) {
  const el = $(id);
  el.textContent = text;
  el.className = isError ? "error" : "";
}

function run(outId, body) {
  try {
    body();
  } catch (e) {
    show(outId, String(e), true);
  }
}

function drawProfile(r) {
  const canvas = $("ex-chart");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const logs = r.log10.map((v) => (v === null ? 0 : v));
  const top = Math.max(1, ...logs);
  const w = canvas.width / logs.length;
  logs.forEach((v, k) => {
    const h = (v / top) * (canvas.height - 20);
    const isMode = r.mode_lo !== null && k >= r.mode_lo && k <= r.mode_hi;
    ctx.fillStyle = isMode ? "#d62" : k === r.ceil_half ? "#26a" : "#999";
    ctx.fillRect(k * w, canvas.height - h, Math.max(1, w - 1), h);
  });
  ctx.fillStyle = "#000";
  ctx.fillText("log10 a_k (orange: modes, blue: ceil(n/2))", 4, 12);
}

$("ex-run").onclick = () =>
  run("ex-out", () => {
    const r = JSON.parse(explore($("ex-family").value, num("ex-n"), num("ex-ell")));
    drawProfile(r);
    const lines = [
      `${r.graph}: degree ${r.degree}, smallest dominating set ${r.min_support}, ${r.total} dominating sets`,
      `modes [${r.mode_lo}, ${r.mode_hi}], ceil(n/2) = ${r.ceil_half}`,
      `unimodal ${r.unimodal}, log-concave ${r.log_concave}, ultra-log-concave ${r.ultra_log_concave}`,
      "",
      "k  a_k  a_k/C(n,k)",
      ...r.coefficients.map((c, k) => `${k}  ${c}  ${r.dominating_share[k].toPrecision(4)}`),
    ];
    show("ex-out", lines.join("\n"));
  });

$("ce-run").onclick = () =>
  run("ce-out", () => {
    const r = JSON.parse(certify(num("ce-k"), $("ce-seeds").value, num("ce-horizon")));
    const head =
      r.failure_index === null
        ? `verified up to n = ${r.verified_up_to}`
        : `fails at n = ${r.failure_index} (${r.failure_reason}); verified up to ${r.verified_up_to ?? "none"}`;
    show("ce-out", `${head}\nchosen modes: ${r.chosen_modes.join(" ")}`);
  });

$("gr-run").onclick = () =>
  run("gr-out", () => {
    const nMax = num("gr-n");
    const ellMax = num("gr-ell");
    const cells = JSON.parse(mode_grid($("gr-family").value, nMax, ellMax));
    const canvas = $("gr-chart");
    const ctx = canvas.getContext("2d");
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    const cw = canvas.width / nMax;
    const ch = canvas.height / ellMax;
    let misses = 0;
    for (const c of cells) {
      const x = (c.n - 1) * cw;
      const y = (c.ell - 1) * ch;
      if (c.offset === null) {
        ctx.fillStyle = "#000";
      } else {
        const t = Math.min(1, Math.abs(c.offset) / 4);
        ctx.fillStyle = `rgb(255, ${Math.round(255 * (1 - t))}, ${Math.round(255 * (1 - t))})`;
        if (c.offset !== 0) misses += 1;
      }
      ctx.fillRect(x, y, cw, ch);
      if (!c.ultra_log_concave) {
        ctx.strokeStyle = "#f00";
        ctx.strokeRect(x, y, cw, ch);
      }
    }
    show("gr-out", `${cells.length} cells, ${misses} without a mode at ceil(n/2); rows are ell = 1 (top) to ${ellMax}`);
  });

await init();
$("ex-run").click();
