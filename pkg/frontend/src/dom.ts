/** Browser bootstrap: binds controls to the store and paints the views. */

import { createApiClient } from "./api.js";
import { PRESET_NAMES, PROFILES } from "./presets.js";
import { emptyStateMessage, gaugeView, resultRows } from "./render.js";
import { SLIDER_LIMITS, WhatIfStore, type SliderField, type UiState } from "./store.js";

function apiBaseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  if (fromQuery) return fromQuery;
  const fromGlobal = (window as { SODIUM_SCOUT_API?: string }).SODIUM_SCOUT_API;
  return fromGlobal ?? "http://127.0.0.1:8000";
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function paint(state: UiState): void {
  el("banner").hidden = state.error === null;
  el("banner").textContent = state.error ? `service error: ${state.error}` : "";
  el("spinner").hidden = !state.requestInFlight;

  for (const field of Object.keys(SLIDER_LIMITS) as SliderField[]) {
    el<HTMLInputElement>(`${field}-slider`).value = String(state[field]);
    el(`${field}-value`).textContent = String(state[field]);
  }
  el<HTMLSelectElement>("profile-select").value = String(state.profileIndex);
  el<HTMLInputElement>("lat-input").value = String(state.location[0]);
  el<HTMLInputElement>("lon-input").value = String(state.location[1]);
  el<HTMLInputElement>("time-input").value = state.queryTime;

  const response = state.lastResponse;
  if (!response) return;

  const gauge = gaugeView(response);
  el("gauge-total").textContent = gauge.totalNa;
  el("gauge-basic").textContent = gauge.basicNa;
  el("gauge-temp").textContent = gauge.tempNa;
  el("gauge-alti").textContent = gauge.altiNa;
  el("gauge-calories").textContent = gauge.dailyCalories;
  el("gauge-target").textContent = gauge.targetMg;

  const list = el("results");
  list.innerHTML = "";
  const empty = emptyStateMessage(response);
  el("empty-state").hidden = empty === null;
  el("empty-state").textContent = empty ?? "";
  for (const row of resultRows(response)) {
    const li = document.createElement("li");
    li.innerHTML =
      `<span class="score">${row.score}</span>` +
      `<span class="name">${row.name}</span>` +
      `<span class="restaurant">${row.restaurant}` +
      `${row.open ? ' <span class="badge">open</span>' : ""}</span>` +
      `<span class="meta">${row.sodiumMg} mg · ${row.distanceKm} km</span>`;
    list.appendChild(li);
  }
}

export function boot(): void {
  const client = createApiClient(apiBaseUrl());
  const store = new WhatIfStore({
    api: (body) => client.recommend(body),
    onChange: paint,
  });

  const select = el<HTMLSelectElement>("profile-select");
  PROFILES.forEach((profile, index) => {
    const option = document.createElement("option");
    option.value = String(index);
    option.textContent = `${profile.user_id} (${profile.sex}, ${profile.age})`;
    select.appendChild(option);
  });
  select.addEventListener("change", () => store.setProfile(Number(select.value)));

  for (const field of Object.keys(SLIDER_LIMITS) as SliderField[]) {
    const slider = el<HTMLInputElement>(`${field}-slider`);
    slider.min = String(SLIDER_LIMITS[field].min);
    slider.max = String(SLIDER_LIMITS[field].max);
    slider.addEventListener("input", () =>
      store.setSlider(field, Number(slider.value))
    );
  }

  const presetBar = el("presets");
  for (const name of PRESET_NAMES) {
    const button = document.createElement("button");
    button.textContent = name;
    button.addEventListener("click", () => store.applyPreset(name));
    presetBar.appendChild(button);
  }

  el<HTMLInputElement>("lat-input").addEventListener("change", (event) => {
    const lat = Number((event.target as HTMLInputElement).value);
    store.setLocation(lat, store.getState().location[1]);
  });
  el<HTMLInputElement>("lon-input").addEventListener("change", (event) => {
    const lon = Number((event.target as HTMLInputElement).value);
    store.setLocation(store.getState().location[0], lon);
  });
  el<HTMLInputElement>("time-input").addEventListener("change", (event) => {
    store.setQueryTime((event.target as HTMLInputElement).value);
  });

  paint(store.getState());
  store.refresh();
}

boot();
